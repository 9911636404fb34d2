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

#include "uncert/symmetric.hpp"

#include <cmath>
#include <numbers>

namespace uncert {

KappaOmega KappaOmega::make(double omega, double kappa) {
    if (!(omega >= 0.0 && omega <= 1.0 && kappa >= 0.0 && kappa <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "omega and kappa must lie in [0, 1]");
    }
    return KappaOmega(omega, kappa);
}

KappaOmega KappaOmega::of(const AppendedQutrit &q) {
    const auto &r = q.r();
    return make(q.omega(), std::min(1.0, std::hypot(r.r1, r.r2)));
}

ComplexMatrix coupling_unitary() {
    const double h = std::numbers::sqrt2 / 2.0;
    ComplexMatrix u = ComplexMatrix::Zero(4, 4);
    u(0, 0) = 1.0;
    u(1, 3) = 1.0;
    u(2, 1) = h;
    u(2, 2) = h;
    u(3, 1) = h;
    u(3, 2) = -h;
    return u;
}

ComplexMatrix swap_operator() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = 1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 3) = 1.0;
    return s;
}

ComplexMatrix embed_qutrit(const AppendedQutrit &q) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.topLeftCorner(3, 3) = appended_qutrit_density(q).matrix();
    return m;
}

DensityMatrix qutrit_to_two_qubit(const AppendedQutrit &q) {
    const ComplexMatrix u = coupling_unitary();
    ComplexMatrix rho = u.adjoint() * embed_qutrit(q) * u;
    // Enforce exact Hermiticity lost to rounding in the product.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::make(std::move(rho));
}

SymmetricTwoQubitParams extract_params(const DensityMatrix &rho_ab) {
    if (rho_ab.dim() != 4) {
        throw Error(ErrorCode::DimMismatch, "expected a 4x4 density matrix");
    }
    const ComplexMatrix &rho = rho_ab.matrix();
    const ComplexMatrix sw = swap_operator();
    const double asym = (sw * rho * sw - rho).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw Error(ErrorCode::NotSymmetricState,
                    "state is not permutation symmetric (residual " + std::to_string(asym) + ")");
    }
    SymmetricTwoQubitParams p;
    const ComplexMatrix id = pauli::identity();
    for (int i = 1; i <= 3; ++i) {
        p.s(i - 1) = (rho * kron(pauli::axis(i), id)).trace().real();
        for (int j = 1; j <= 3; ++j) {
            p.t(i - 1, j - 1) = (rho * kron(pauli::axis(i), pauli::axis(j))).trace().real();
        }
    }
    return p;
}

ComplexMatrix reconstruct_two_qubit(const SymmetricTwoQubitParams &p) {
    const ComplexMatrix id = pauli::identity();
    ComplexMatrix m = kron(id, id);
    for (int i = 1; i <= 3; ++i) {
        m += p.s(i - 1) * (kron(pauli::axis(i), id) + kron(id, pauli::axis(i)));
        for (int j = 1; j <= 3; ++j) {
            m += p.t(i - 1, j - 1) * kron(pauli::axis(i), pauli::axis(j));
        }
    }
    return 0.25 * m;
}

std::pair<Observable, Observable> transformed_observables() {
    const ComplexMatrix x = pauli::x();
    const ComplexMatrix y = pauli::y();
    return {Observable::make(0.5 * (kron(x, x) - kron(y, y))),
            Observable::make(0.5 * (kron(x, y) + kron(y, x)))};
}

UncertaintyReport two_qubit_uncertainty(const AppendedQutrit &q) {
    const double w = q.omega();
    const double r1 = q.r().r1;
    const double r2 = q.r().r2;
    UncertaintyReport rep;
    rep.means = {w * r1, w * r2};
    rep.second_moments = {w, w};
    rep.variances = {w - w * w * r1 * r1, w - w * w * r2 * r2};
    rep.sum_of_variances = rep.variances[0] + rep.variances[1];
    return rep;
}

double uncertainty_sum_kappa(const KappaOmega &ko) {
    const double w = ko.omega();
    const double k = ko.kappa();
    return 2.0 * w - w * w * k * k;
}

} // namespace uncert
