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

#include "uncert/region.hpp"

#include <algorithm>
#include <cmath>

#include "uncert/core.hpp"
#include "uncert/entanglement.hpp"
#include "uncert/qubit.hpp"
#include "uncert/qutrit.hpp"
#include "uncert/symmetric.hpp"

namespace uncert {

namespace {

constexpr double kBoundaryBand = 1e-6;

double clamped_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

double unit_clamp(double v) { return std::clamp(v, 0.0, 1.0); }

const PauliDirection &axis_a() {
    static const PauliDirection a = PauliDirection::make(1.0, 0.0, 0.0);
    return a;
}

const PauliDirection &axis_b() {
    static const PauliDirection b = PauliDirection::make(0.0, 1.0, 0.0);
    return b;
}

RegionTag qutrit_tag(double d1, double d2) {
    const bool lower = std::abs(d2 - qutrit_boundary_min(d1)) <= kBoundaryBand;
    const bool mirror = std::abs(d1 - qutrit_boundary_min(d2)) <= kBoundaryBand;
    return lower || mirror ? RegionTag::Boundary : RegionTag::Interior;
}

template <class F>
ContourGrid omega_kappa_grid(std::size_t grid_n, const char *z_name, F &&field) {
    if (grid_n < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid size must be at least 2");
    }
    ContourGrid g;
    g.x_name = "omega";
    g.y_name = "kappa";
    g.z_name = z_name;
    g.x_vals = unit_linspace(grid_n);
    g.y_vals = g.x_vals;
    g.z.reserve(grid_n * grid_n);
    for (double kappa : g.y_vals) {
        for (double omega : g.x_vals) {
            g.z.push_back(field(KappaOmega::make(omega, kappa)));
        }
    }
    return g;
}

} // namespace

std::vector<double> unit_linspace(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return v;
}

std::vector<RegionPoint> sample_qubit_region(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<RegionPoint> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const BlochVector r = sample_qubit_state(SampleMode::BallUniform, rng);
        const auto rep = qubit_variance_pair(r, axis_a(), axis_b());
        RegionPoint p{unit_clamp(clamped_sqrt(rep.variances[0])), unit_clamp(clamped_sqrt(rep.variances[1])),
                      RegionTag::Interior};
        if (std::abs(std::hypot(p.d1, p.d2) - 1.0) <= kBoundaryBand) {
            p.tag = RegionTag::Boundary;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<RegionPoint> sample_qutrit_region(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<RegionPoint> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double omega = rng.uniform();
        const BlochVector r = BlochVector::from(rng.unit_vector());
        const auto rep = qutrit_variance_pair(AppendedQutrit::make(omega, r), axis_a(), axis_b());
        const double d1 = unit_clamp(clamped_sqrt(rep.variances[0]));
        const double d2 = unit_clamp(clamped_sqrt(rep.variances[1]));
        out.push_back({d1, d2, qutrit_tag(d1, d2)});
    }
    const auto origin = qutrit_variance_pair(AppendedQutrit::make(0.0, {0.0, 0.0, 1.0}), axis_a(), axis_b());
    out.push_back({clamped_sqrt(origin.variances[0]), clamped_sqrt(origin.variances[1]), RegionTag::Boundary});
    return out;
}

ContourGrid contour_sum(std::size_t grid_n) {
    return omega_kappa_grid(grid_n, "uncertainty_sum", [](const KappaOmega &ko) { return uncertainty_sum_kappa(ko); });
}

ContourGrid contour_concurrence(std::size_t grid_n) {
    return omega_kappa_grid(grid_n, "concurrence", [](const KappaOmega &ko) { return concurrence_kappa_omega(ko); });
}

} // namespace uncert
