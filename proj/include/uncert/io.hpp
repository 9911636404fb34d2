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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "uncert/contour.hpp"
#include "uncert/core.hpp"

namespace uncert::io {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1.0";

/// Shortest decimal that parses back to the same double; "nan" for NaN.
std::string format_number(double v);

const char *tag_name(RegionTag tag) noexcept;
RegionTag parse_tag(std::string_view name);

/// Header `d1,d2,tag`, one row per point, '\n' line endings.
std::string region_csv(std::span<const RegionPoint> points);
Json region_json(std::span<const RegionPoint> points);
std::vector<RegionPoint> region_from_json(const Json &j);

/// Long form: header `x,y,z`, rows in y-major order, invalid cells as `nan`.
std::string contour_csv(const ContourGrid &grid);
/// {x_name, y_name, z_name, x, y, z} with z nested by row and invalid cells null.
Json contour_json(const ContourGrid &grid);
ContourGrid contour_from_json(const Json &j);

/// Nested rows of [re, im] pairs.
Json matrix_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Json report_json(const UncertaintyReport &r);

/// {schema_version, command, inputs, results}.
Json envelope(std::string_view command, Json inputs, Json results);

/// Writes through a sibling temporary file and a rename. Throws Error(Io).
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

} // namespace uncert::io
