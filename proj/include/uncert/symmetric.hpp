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

#include <utility>

#include "uncert/core.hpp"
#include "uncert/qutrit.hpp"

namespace uncert {

// Basis conventions.
//   Uncoupled (two-qubit) order: |1/2;1/2>, |1/2;-1/2>, |-1/2;1/2>, |-1/2;-1/2>.
//   Coupled slots of the 4x4 embedded qutrit: the qubit block occupies slots 1-2
//   (|11>, |1-1>), the appended level slot 3 (|10>) and slot 4 (|00>) is empty.
// rho_AB = U^dag rho_qutrit U with U from coupling_unitary().

/// Parameters of rho_AB = 1/4 [I + sum s_i (sigma_i x I + I x sigma_i) + sum t_ij sigma_i x sigma_j].
struct SymmetricTwoQubitParams {
    Vec3 s = Vec3::Zero();
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

/// (omega, kappa) with kappa = sqrt(r1^2 + r2^2).
class KappaOmega {
  public:
    /// Throws OutOfRange outside [0, 1]^2.
    static KappaOmega make(double omega, double kappa);
    static KappaOmega of(const AppendedQutrit &q);

    double omega() const noexcept { return omega_; }
    double kappa() const noexcept { return kappa_; }

  private:
    KappaOmega(double omega, double kappa) : omega_(omega), kappa_(kappa) {}
    double omega_;
    double kappa_;
};

/// The fixed 4x4 coupled/uncoupled basis change.
ComplexMatrix coupling_unitary();

/// Particle exchange on two qubits.
ComplexMatrix swap_operator();

/// rho_qutrit padded to 4x4 with an empty fourth row and column.
ComplexMatrix embed_qutrit(const AppendedQutrit &q);

/// U^dag rho_qutrit U.
DensityMatrix qutrit_to_two_qubit(const AppendedQutrit &q);

/// Inverts the (s, t) expansion by s_i = Tr(rho sigma_i x I), t_ij = Tr(rho sigma_i x sigma_j).
/// Throws NotSymmetricState if SWAP rho SWAP differs from rho by more than 1e-10.
SymmetricTwoQubitParams extract_params(const DensityMatrix &rho_ab);

/// Builds the 4x4 matrix from (s, t); the result is not validated.
ComplexMatrix reconstruct_two_qubit(const SymmetricTwoQubitParams &p);

/// (1/2)(s1 x s1 - s2 x s2) and (1/2)(s1 x s2 + s2 x s1).
std::pair<Observable, Observable> transformed_observables();

/// Closed form means (omega r1, omega r2), second moments omega, variances
/// omega - omega^2 r_k^2 for the transformed observables.
UncertaintyReport two_qubit_uncertainty(const AppendedQutrit &q);

/// 2 omega - omega^2 kappa^2.
double uncertainty_sum_kappa(const KappaOmega &ko);

} // namespace uncert
