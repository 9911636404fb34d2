// Copyright 2026 The uncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uncert/qubit.hpp"

#include <cmath>

namespace uncert {

DensityMatrix bloch_to_density(const BlochVector &r) {
    const double n = r.norm();
    if (!std::isfinite(n) || n > 1.0 + 1e-12) {
        throw Error(ErrorCode::BlochNormExceeded,
                    "Bloch vector norm " + std::to_string(n) + " exceeds 1");
    }
    ComplexMatrix m = 0.5 * (pauli::identity() + r.r1 * pauli::x() + r.r2 * pauli::y() +
                             r.r3 * pauli::z());
    return DensityMatrix::make(std::move(m));
}

Observable pauli_observable(const PauliDirection &a) {
    const Vec3 &v = a.vec();
    return Observable::make(v.x() * pauli::x() + v.y() * pauli::y() + v.z() * pauli::z());
}

UncertaintyReport qubit_variance_pair(const BlochVector &r, const PauliDirection &a,
                                      const PauliDirection &b) {
    require_orthogonal(a, b);
    const double ma = a.dot(r.vec());
    const double mb = b.dot(r.vec());
    UncertaintyReport rep;
    rep.means = {ma, mb};
    rep.second_moments = {1.0, 1.0};
    rep.variances = {1.0 - ma * ma, 1.0 - mb * mb};
    rep.sum_of_variances = rep.variances[0] + rep.variances[1];
    return rep;
}

bool qubit_region_contains(double d1, double d2) {
    if (!(d1 >= 0.0 && d1 <= 1.0 && d2 >= 0.0 && d2 <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "standard deviations must lie in [0, 1]");
    }
    return d1 * d1 + d2 * d2 >= 1.0 - 1e-10;
}

} // namespace uncert
