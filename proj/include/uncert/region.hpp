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

#include <cstdint>
#include <vector>

#include "uncert/contour.hpp"

namespace uncert {

/// Ball-uniform Bloch states measured with sigma_x, sigma_y. Points within
/// 1e-6 of the unit circle are tagged Boundary.
std::vector<RegionPoint> sample_qubit_region(std::size_t n, std::uint64_t seed);

/// n draws of (omega uniform on [0,1], r uniform on the sphere) measured with
/// sigma_x (+) 0, sigma_y (+) 0, followed by the omega = 0 origin. Points within
/// 1e-6 of either lower edge d2 = f(d1), d1 = f(d2) are tagged Boundary.
std::vector<RegionPoint> sample_qutrit_region(std::size_t n, std::uint64_t seed);

/// z = 2 omega - omega^2 kappa^2 with x = omega, y = kappa.
ContourGrid contour_sum(std::size_t grid_n);

/// z = |omega (1 + kappa) - 1| with x = omega, y = kappa.
ContourGrid contour_concurrence(std::size_t grid_n);

} // namespace uncert
