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

#include "uncert/qutrit.hpp"

#include <cmath>

namespace uncert {

AppendedQutrit AppendedQutrit::make(double omega, const BlochVector &r) {
    if (!(omega >= 0.0 && omega <= 1.0)) {
        throw Error(ErrorCode::InvalidOmega, "omega must lie in [0, 1]");
    }
    const double n = r.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol::unit) {
        throw Error(ErrorCode::NotUnitBloch, "qutrit Bloch vector must be a unit vector");
    }
    return AppendedQutrit(omega, r);
}

DensityMatrix appended_qutrit_density(const AppendedQutrit &q) {
    const double w = q.omega();
    const auto &r = q.r();
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = w * (1.0 + r.r3) / 2.0;
    m(0, 1) = Complex(w * r.r1 / 2.0, -w * r.r2 / 2.0);
    m(1, 0) = Complex(w * r.r1 / 2.0, w * r.r2 / 2.0);
    m(1, 1) = w * (1.0 - r.r3) / 2.0;
    m(2, 2) = 1.0 - w;
    return DensityMatrix::make(std::move(m));
}

Observable embedded_observable(const PauliDirection &a) {
    const Vec3 &v = a.vec();
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m.topLeftCorner(2, 2) = v.x() * pauli::x() + v.y() * pauli::y() + v.z() * pauli::z();
    return Observable::make(std::move(m));
}

UncertaintyReport qutrit_variance_pair(const AppendedQutrit &q, const PauliDirection &a,
                                       const PauliDirection &b) {
    require_orthogonal(a, b);
    const double w = q.omega();
    const double ar = a.dot(q.r().vec());
    const double br = b.dot(q.r().vec());
    UncertaintyReport rep;
    rep.means = {w * ar, w * br};
    rep.second_moments = {w, w};
    rep.variances = {w - w * w * ar * ar, w - w * w * br * br};
    rep.sum_of_variances = rep.variances[0] + rep.variances[1];
    return rep;
}

double qutrit_boundary_min(double d1) {
    if (!(d1 >= 0.0 && d1 <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "standard deviation must lie in [0, 1]");
    }
    return d1 * std::sqrt(1.0 - d1 * d1);
}

} // namespace uncert
