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

#include <map>
#include <string_view>
#include <utility>

#include "uncert/contour.hpp"
#include "uncert/core.hpp"

namespace uncert {

/// Two-level subspace (i, j), 1-based, i < j.
class SubspacePair {
  public:
    /// Throws InvalidPair unless (i, j) is (1,2), (1,3) or (2,3).
    static SubspacePair make(int i, int j);
    /// Accepts "12", "13", "23".
    static SubspacePair parse(std::string_view text);

    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

    friend auto operator<=>(const SubspacePair &, const SubspacePair &) = default;

  private:
    SubspacePair(int i, int j) : i_(i), j_(j) {}
    int i_;
    int j_;
};

/// Subspace Bloch vector Tr(rho sigma^(ij)) = (2 Re rho_ij, -2 Im rho_ij, rho_ii - rho_jj).
struct SubspaceBlochVector {
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 0.0;

    Vec3 vec() const { return {n1, n2, n3}; }
    double norm() const { return vec().norm(); }
};

/// Pauli matrix sigma_k acting on levels i, j of a qutrit. Axis k in {1, 2, 3}.
Observable sigma_ij(SubspacePair pair, int axis);

/// sigma^(ij) . a.
Observable subspace_observable(SubspacePair pair, const PauliDirection &a);

SubspaceBlochVector subspace_bloch(const DensityMatrix &rho, SubspacePair pair);

/// (n_hat, n_hat_perp). Falls back to (x, y) when n vanishes.
std::pair<PauliDirection, PauliDirection> natural_frame(const SubspaceBlochVector &n);

/// Closed form in populations and the subspace Bloch vector:
/// <A^2> = rho_ii + rho_jj, <A> = a.n, sum = 2(rho_ii + rho_jj) - (a.n)^2 - (b.n)^2.
UncertaintyReport atomic_uncertainty_sum(const DensityMatrix &rho, SubspacePair pair,
                                         const PauliDirection &a, const PauliDirection &b);

/// Same with the natural frame a = n_hat, b = n_hat_perp.
UncertaintyReport atomic_uncertainty_sum(const DensityMatrix &rho, SubspacePair pair);

/// Minimum over coherences: 2s - s^2 with s = pop_i + pop_j.
double min_uncertainty_sum(double pop_i, double pop_j);

enum class AtomicPreset { Lambda, Vee, Xi };

AtomicPreset parse_preset(std::string_view name);
const char *preset_name(AtomicPreset preset) noexcept;

/// Closed interval of minimum sums; lo == hi for point presets.
struct MinSumInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool is_point() const noexcept { return lo == hi; }
};

/// Steady-state populations (rho_11, rho_22, rho_33) of a point preset.
/// The V-system values are stored as exact 0.2 / 0.4 / 0.4. Throws
/// UnknownPreset for Xi, which is only specified by population ranges.
std::array<double, 3> preset_populations(AtomicPreset preset);

/// Minimum sums for the subspace pairs evaluated for each preset:
///   Lambda: (1,2), (1,3);  Vee: (1,3), (2,3);  Xi: (1,2), (2,3) as intervals.
std::map<SubspacePair, MinSumInterval> preset_min_sums(AtomicPreset preset);

/// Xi system, pair (1,2) at a given rho_33 in [1/3, 1/2].
double xi_min_sum_12(double rho33);
/// Xi system, pair (2,3) at a given rho_11 in [0, 1/3].
double xi_min_sum_23(double rho11);

/// min_uncertainty_sum over (rho_ii, rho_jj) in [0,1]^2; cells with
/// rho_ii + rho_jj > 1 are invalid. Requires grid_n >= 2.
ContourGrid min_sum_surface(std::size_t grid_n);

} // namespace uncert
