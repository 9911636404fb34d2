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

/// rho = (I + r . sigma) / 2. Throws BlochNormExceeded when |r| > 1 + 1e-12.
DensityMatrix bloch_to_density(const BlochVector &r);

/// sigma . a, a 2x2 observable with eigenvalues +-1.
Observable pauli_observable(const PauliDirection &a);

/// Closed-form variances 1 - (a.r)^2 and 1 - (b.r)^2 for orthogonal a, b.
UncertaintyReport qubit_variance_pair(const BlochVector &r, const PauliDirection &a,
                                      const PauliDirection &b);

/// Qubit uncertainty region on standard deviations (not variances):
/// d1^2 + d2^2 >= 1. Throws OutOfRange outside [0, 1]^2.
bool qubit_region_contains(double d1, double d2);

} // namespace uncert
