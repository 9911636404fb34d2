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

#include "uncert/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace uncert {

namespace {

void require_two_qubit(const DensityMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::DimMismatch, "expected a 4x4 two-qubit density matrix");
    }
}

ComplexMatrix spin_flip() { return kron(pauli::y(), pauli::y()); }

} // namespace

ConcurrenceResult concurrence_general(const DensityMatrix &rho) {
    require_two_qubit(rho);
    // rho = X X^dag with X = V diag(sqrt(mu)); the square roots of the lambdas
    // are the singular values of tau = X^dag (sy x sy) X^*.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix());
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure, "eigensolver failed on the density matrix");
    }
    Eigen::VectorXd mu = eig.eigenvalues();
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        mu(k) = std::sqrt(std::max(0.0, mu(k)));
    }
    const ComplexMatrix x = eig.eigenvectors() * mu.asDiagonal();
    const ComplexMatrix tau = x.adjoint() * spin_flip() * x.conjugate();
    Eigen::JacobiSVD<ComplexMatrix> svd(tau);
    Eigen::VectorXd sv = svd.singularValues();
    if (!sv.allFinite()) {
        throw Error(ErrorCode::EigenFailure, "singular value decomposition produced non-finite values");
    }
    std::array<double, 4> roots{};
    for (int k = 0; k < 4; ++k) {
        roots[k] = sv(k);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());

    ConcurrenceResult out;
    for (int k = 0; k < 4; ++k) {
        out.lambdas[k] = roots[k] * roots[k];
    }
    out.value = std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
    return out;
}

double concurrence_x_state(const DensityMatrix &rho) {
    require_two_qubit(rho);
    const ComplexMatrix &m = rho.matrix();
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            const bool on_pattern = i == j || i + j == 3;
            if (!on_pattern && std::abs(m(i, j)) >= 1e-12) {
                throw Error(ErrorCode::NotXState, "matrix entry (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) + ") breaks the X pattern");
            }
        }
    }
    const double p11 = std::max(0.0, m(0, 0).real());
    const double p22 = std::max(0.0, m(1, 1).real());
    const double p33 = std::max(0.0, m(2, 2).real());
    const double p44 = std::max(0.0, m(3, 3).real());
    const double a = std::abs(m(0, 3)) - std::sqrt(p22 * p33);
    const double b = std::abs(m(1, 2)) - std::sqrt(p11 * p44);
    return 2.0 * std::max({0.0, a, b});
}

double concurrence_kappa_omega(const KappaOmega &ko) {
    return std::abs(ko.omega() * (1.0 + ko.kappa()) - 1.0);
}

SeparableEnsemble SeparableEnsemble::make(std::vector<EnsembleTerm> terms) {
    if (terms.empty()) {
        throw Error(ErrorCode::InvalidEnsemble, "ensemble has no terms");
    }
    double total = 0.0;
    for (const auto &t : terms) {
        if (!(t.p >= 0.0 && t.p <= 1.0)) {
            throw Error(ErrorCode::InvalidEnsemble, "ensemble weight outside [0, 1]");
        }
        if (!t.s_hat.allFinite() || std::abs(t.s_hat.norm() - 1.0) > 1e-12) {
            throw Error(ErrorCode::InvalidEnsemble, "ensemble constituents must be pure (|s| = 1)");
        }
        total += t.p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidEnsemble, "ensemble weights do not sum to 1");
    }
    return SeparableEnsemble(std::move(terms));
}

DensityMatrix separable_state(const SeparableEnsemble &ensemble) {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (const auto &t : ensemble.terms()) {
        const Vec3 &s = t.s_hat;
        const ComplexMatrix one =
            0.5 * (pauli::identity() + s.x() * pauli::x() + s.y() * pauli::y() + s.z() * pauli::z());
        m += t.p * kron(one, one);
    }
    m = 0.5 * (m + m.adjoint()).eval();
    // Weights are only normalised to 1e-12; renormalise the trace.
    m /= m.trace().real();
    return DensityMatrix::make(std::move(m));
}

double separable_component_sum(double s3) {
    if (!(s3 >= -1.0 && s3 <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "s3 must lie in [-1, 1]");
    }
    const double q = s3 * s3;
    return 0.75 + 1.5 * q - 0.25 * q * q;
}

double separable_uncertainty_sum(const SeparableEnsemble &ensemble) {
    double sum = 0.0;
    for (const auto &t : ensemble.terms()) {
        sum += t.p * separable_component_sum(std::clamp(t.s_hat.z(), -1.0, 1.0));
    }
    return sum;
}

double separable_mixture_variance_sum(const SeparableEnsemble &ensemble) {
    const auto rho = separable_state(ensemble);
    const auto [a1, a2] = transformed_observables();
    return variance(rho, a1) + variance(rho, a2);
}

double separable_bound_oracle(std::size_t grid_n, double lo, double hi) {
    if (grid_n < 100) {
        throw Error(ErrorCode::InvalidArgument, "oracle grid needs at least 100 points");
    }
    if (!(lo >= -1.0 && hi <= 1.0 && lo < hi)) {
        throw Error(ErrorCode::OutOfRange, "oracle range must satisfy -1 <= lo < hi <= 1");
    }
    double best = separable_component_sum(lo);
    for (std::size_t k = 1; k < grid_n; ++k) {
        const double s3 = k + 1 == grid_n ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid_n - 1);
        best = std::min(best, separable_component_sum(s3));
    }
    return best;
}

} // namespace uncert
