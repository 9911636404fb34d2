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

#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "uncert/qutrit.hpp"
#include "uncert/region.hpp"

using namespace uncert;

TEST_CASE("qubit region samples never enter the quarter disc") {
    const auto pts = sample_qubit_region(100000, 7);
    REQUIRE(pts.size() == 100000);
    for (const auto &p : pts) {
        CHECK(p.d1 * p.d1 + p.d2 * p.d2 >= 1.0 - 1e-10);
        CHECK(p.d1 >= 0.0);
        CHECK(p.d2 <= 1.0);
        const bool near = std::abs(std::hypot(p.d1, p.d2) - 1.0) <= 1e-6;
        CHECK((p.tag == RegionTag::Boundary) == near);
    }
    CHECK(sample_qubit_region(0, 1).empty());
}

TEST_CASE("qutrit region samples stay above the boundary curve") {
    const auto pts = sample_qutrit_region(20000, 3);
    REQUIRE(pts.size() == 20001);
    CHECK(pts.back().d1 == 0.0);
    CHECK(pts.back().d2 == 0.0);
    CHECK(pts.back().tag == RegionTag::Boundary);
    for (const auto &p : pts) {
        CHECK(p.d2 >= qutrit_boundary_min(std::min(1.0, p.d1)) - 1e-6);
        CHECK(p.d1 >= qutrit_boundary_min(std::min(1.0, p.d2)) - 1e-6);
    }
    CHECK(sample_qutrit_region(1, 1).size() == 2);
}

TEST_CASE("region sampling is deterministic") {
    const auto a = sample_qutrit_region(500, 99);
    const auto b = sample_qutrit_region(500, 99);
    const auto c = sample_qutrit_region(500, 100);
    bool differs = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].d1 == b[k].d1);
        CHECK(a[k].d2 == b[k].d2);
        differs = differs || a[k].d1 != c[k].d1;
    }
    CHECK(differs);
}

TEST_CASE("contour_sum") {
    const auto g = contour_sum(3);
    CHECK(g.x_name == "omega");
    CHECK(g.y_name == "kappa");
    REQUIRE(g.z.size() == 9);
    for (std::size_t iy = 0; iy < 3; ++iy) CHECK(g.at(iy, 0) == 0.0);
    CHECK(g.at(0, 2) == 2.0);
    CHECK(g.at(2, 2) == 1.0);
    CHECK(g.at(2, 1) == 0.75);
    CHECK_THROWS_AS(contour_sum(1), Error);
}

TEST_CASE("contour_concurrence") {
    const auto g = contour_concurrence(5);
    for (std::size_t iy = 0; iy < 5; ++iy) CHECK(g.at(iy, 0) == 1.0);
    CHECK(g.at(4, 4) == 1.0);
    CHECK(g.at(4, 2) == 0.0); // omega = 1/2, kappa = 1 lies on the zero curve
    CHECK(g.at(0, 4) == 0.0);
}

TEST_CASE("cross-figure consistency") {
    const std::size_t n = 317;
    const auto sum = contour_sum(n);
    const auto conc = contour_concurrence(n);
    bool witness = false;
    for (std::size_t iy = 0; iy < n; ++iy) {
        for (std::size_t ix = 0; ix < n; ++ix) {
            if (sum.at(iy, ix) < 0.75) CHECK(conc.at(iy, ix) > 0.0);
            witness = witness || (conc.at(iy, ix) > 0.0 && sum.at(iy, ix) >= 0.75);
        }
    }
    CHECK(witness);
}

TEST_CASE("unit_linspace") {
    const auto v = unit_linspace(5);
    CHECK(v == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}
