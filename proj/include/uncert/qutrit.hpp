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

#include "uncert/core.hpp"

namespace uncert {

/// omega |psi><psi| (+) (1 - omega): a pure qubit state with weight omega and an
/// appended third level holding the remaining population.
class AppendedQutrit {
  public:
    /// Throws InvalidOmega outside [0, 1] and NotUnitBloch unless |r| = 1 to 1e-12.
    static AppendedQutrit make(double omega, const BlochVector &r);

    double omega() const noexcept { return omega_; }
    const BlochVector &r() const noexcept { return r_; }

  private:
    AppendedQutrit(double omega, BlochVector r) : omega_(omega), r_(r) {}
    double omega_;
    BlochVector r_;
};

DensityMatrix appended_qutrit_density(const AppendedQutrit &q);

/// (sigma . a) (+) 0 on the qutrit.
Observable embedded_observable(const PauliDirection &a);

/// Closed form: <A> = omega (a.r), <A^2> = omega, Var = omega - omega^2 (a.r)^2.
UncertaintyReport qutrit_variance_pair(const AppendedQutrit &q, const PauliDirection &a,
                                       const PauliDirection &b);

/// Lower edge of the qutrit region, d1 sqrt(1 - d1^2). The mirror edge is the
/// same function with the roles of d1 and d2 exchanged.
double qutrit_boundary_min(double d1);

} // namespace uncert
