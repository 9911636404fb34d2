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
#include <string>
#include <string_view>
#include <vector>

namespace uncert {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t passed_count() const;
    std::size_t failed_count() const;
};

/// Suite names accepted by run_verification, in run order.
const std::vector<std::string> &verification_suites();

/// Runs the invariant checks of one suite ("core", "regions", "atomic", "map",
/// "entanglement") or of all of them ("all"). Output depends only on the
/// arguments. Throws InvalidArgument for an unknown suite name.
std::vector<SuiteResult> run_verification(std::string_view suite, std::uint64_t seed);

} // namespace uncert
