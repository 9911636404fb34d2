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

#pragma once

#include <array>
#include <vector>

#include "uncert/core.hpp"
#include "uncert/symmetric.hpp"

namespace uncert {

struct ConcurrenceResult {
    double value = 0.0;
    /// Eigenvalues of rho (sy x sy) rho^* (sy x sy), descending.
    std::array<double, 4> lambdas{};
};

/// Wootters concurrence of an arbitrary two-qubit state.
ConcurrenceResult concurrence_general(const DensityMatrix &rho);

/// 2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)).
/// Throws NotXState if any off-pattern entry exceeds 1e-12.
double concurrence_x_state(const DensityMatrix &rho);

/// |omega (1 + kappa) - 1| for the two-qubit image of an appended qutrit.
double concurrence_kappa_omega(const KappaOmega &ko);

struct EnsembleTerm {
    double p = 0.0;
    Vec3 s_hat = Vec3::UnitZ();
};

/// sum_i p_i rho_i x rho_i with pure constituents rho_i = (I + sigma . s_i) / 2.
class SeparableEnsemble {
  public:
    /// Throws InvalidEnsemble unless the weights are nonnegative and sum to 1
    /// and every s_hat is a unit vector (both to 1e-12).
    static SeparableEnsemble make(std::vector<EnsembleTerm> terms);

    const std::vector<EnsembleTerm> &terms() const noexcept { return terms_; }

  private:
    explicit SeparableEnsemble(std::vector<EnsembleTerm> terms) : terms_(std::move(terms)) {}
    std::vector<EnsembleTerm> terms_;
};

DensityMatrix separable_state(const SeparableEnsemble &ensemble);

/// Variance sum of the transformed observables on one product term:
/// 3/4 + (3/2) s3^2 - (1/4) s3^4.
double separable_component_sum(double s3);

/// Weighted average of the component sums (the per-term variance convention).
double separable_uncertainty_sum(const SeparableEnsemble &ensemble);

/// Variance sum of the mixture itself, computed from the density matrix. Never
/// smaller than separable_uncertainty_sum.
double separable_mixture_variance_sum(const SeparableEnsemble &ensemble);

/// Grid minimum of separable_component_sum over grid_n points of [lo, hi].
/// Requires grid_n >= 100 and -1 <= lo < hi <= 1.
double separable_bound_oracle(std::size_t grid_n, double lo = -1.0, double hi = 1.0);

} // namespace uncert
