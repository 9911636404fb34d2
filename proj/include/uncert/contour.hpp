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

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace uncert {

enum class RegionTag { Interior, Boundary };

/// One attainable (dA1, dA2) pair of standard deviations.
struct RegionPoint {
    double d1 = 0.0;
    double d2 = 0.0;
    RegionTag tag = RegionTag::Interior;
};

/// Scalar field on a rectangular grid. z is row-major with one row per y value;
/// cells outside the field's domain hold NaN.
struct ContourGrid {
    std::string x_name;
    std::string y_name;
    std::string z_name;
    std::vector<double> x_vals;
    std::vector<double> y_vals;
    std::vector<double> z;

    static constexpr double invalid = std::numeric_limits<double>::quiet_NaN();

    double at(std::size_t iy, std::size_t ix) const { return z[iy * x_vals.size() + ix]; }
    bool valid(std::size_t iy, std::size_t ix) const { return !std::isnan(at(iy, ix)); }
};

/// n equally spaced values from 0 to 1 inclusive.
std::vector<double> unit_linspace(std::size_t n);

} // namespace uncert
