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

#include "uncert/atomic.hpp"

#include <cmath>

namespace uncert {

SubspacePair SubspacePair::make(int i, int j) {
    const bool ok = (i == 1 && j == 2) || (i == 1 && j == 3) || (i == 2 && j == 3);
    if (!ok) {
        throw Error(ErrorCode::InvalidPair, "subspace pair must be 12, 13 or 23, got " +
                                                std::to_string(i) + std::to_string(j));
    }
    return SubspacePair(i, j);
}

SubspacePair SubspacePair::parse(std::string_view text) {
    if (text.size() != 2 || text[0] < '0' || text[0] > '9' || text[1] < '0' || text[1] > '9') {
        throw Error(ErrorCode::InvalidPair, "subspace pair must be 12, 13 or 23");
    }
    return make(text[0] - '0', text[1] - '0');
}

Observable sigma_ij(SubspacePair pair, int axis) {
    const Eigen::Index i = pair.i() - 1;
    const Eigen::Index j = pair.j() - 1;
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    switch (axis) {
    case 1:
        m(i, j) = 1.0;
        m(j, i) = 1.0;
        break;
    case 2:
        m(i, j) = Complex(0.0, -1.0);
        m(j, i) = Complex(0.0, 1.0);
        break;
    case 3:
        m(i, i) = 1.0;
        m(j, j) = -1.0;
        break;
    default:
        throw Error(ErrorCode::InvalidAxis, "axis must be 1, 2 or 3");
    }
    return Observable::make(std::move(m));
}

Observable subspace_observable(SubspacePair pair, const PauliDirection &a) {
    const Vec3 &v = a.vec();
    ComplexMatrix m = v.x() * sigma_ij(pair, 1).matrix() + v.y() * sigma_ij(pair, 2).matrix() +
                      v.z() * sigma_ij(pair, 3).matrix();
    return Observable::make(std::move(m));
}

namespace {

void require_qutrit(const DensityMatrix &rho) {
    if (rho.dim() != 3) {
        throw Error(ErrorCode::DimMismatch, "expected a 3x3 density matrix");
    }
}

} // namespace

SubspaceBlochVector subspace_bloch(const DensityMatrix &rho, SubspacePair pair) {
    require_qutrit(rho);
    const Eigen::Index i = pair.i() - 1;
    const Eigen::Index j = pair.j() - 1;
    // Tr(rho sigma_2) = -2 Im rho_ij for sigma_2 with -i above the diagonal.
    const Complex c = rho(i, j);
    return {2.0 * c.real(), -2.0 * c.imag(), rho(i, i).real() - rho(j, j).real()};
}

std::pair<PauliDirection, PauliDirection> natural_frame(const SubspaceBlochVector &n) {
    const Vec3 v = n.vec();
    const double len = v.norm();
    if (len < 1e-15) {
        return {PauliDirection::make(1.0, 0.0, 0.0), PauliDirection::make(0.0, 1.0, 0.0)};
    }
    const Vec3 a = v / len;
    // Gram-Schmidt against z, or against x when a is (nearly) parallel to z.
    Vec3 ref = std::abs(a.z()) < 0.9 ? Vec3(0.0, 0.0, 1.0) : Vec3(1.0, 0.0, 0.0);
    Vec3 b = ref - ref.dot(a) * a;
    b.normalize();
    return {PauliDirection::make(a), PauliDirection::make(b)};
}

UncertaintyReport atomic_uncertainty_sum(const DensityMatrix &rho, SubspacePair pair,
                                         const PauliDirection &a, const PauliDirection &b) {
    require_qutrit(rho);
    require_orthogonal(a, b);
    const Vec3 n = subspace_bloch(rho, pair).vec();
    const double pops = rho(pair.i() - 1, pair.i() - 1).real() + rho(pair.j() - 1, pair.j() - 1).real();
    const double ma = a.dot(n);
    const double mb = b.dot(n);
    UncertaintyReport rep;
    rep.means = {ma, mb};
    rep.second_moments = {pops, pops};
    rep.variances = {pops - ma * ma, pops - mb * mb};
    rep.sum_of_variances = 2.0 * pops - ma * ma - mb * mb;
    return rep;
}

UncertaintyReport atomic_uncertainty_sum(const DensityMatrix &rho, SubspacePair pair) {
    const auto [a, b] = natural_frame(subspace_bloch(rho, pair));
    return atomic_uncertainty_sum(rho, pair, a, b);
}

double min_uncertainty_sum(double pop_i, double pop_j) {
    const double s = pop_i + pop_j;
    if (!(pop_i >= 0.0 && pop_j >= 0.0 && s <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::InvalidPopulations,
                    "populations must be nonnegative with pop_i + pop_j <= 1");
    }
    return 2.0 * s - s * s;
}

AtomicPreset parse_preset(std::string_view name) {
    if (name == "lambda") return AtomicPreset::Lambda;
    if (name == "vee") return AtomicPreset::Vee;
    if (name == "xi") return AtomicPreset::Xi;
    throw Error(ErrorCode::UnknownPreset, "unknown preset '" + std::string(name) + "'");
}

const char *preset_name(AtomicPreset preset) noexcept {
    switch (preset) {
    case AtomicPreset::Lambda: return "lambda";
    case AtomicPreset::Vee: return "vee";
    case AtomicPreset::Xi: return "xi";
    }
    return "unknown";
}

std::array<double, 3> preset_populations(AtomicPreset preset) {
    switch (preset) {
    case AtomicPreset::Lambda: return {0.0, 0.5, 0.5}; // coherent population trapping
    case AtomicPreset::Vee: return {0.2, 0.4, 0.4};    // approximate steady state
    case AtomicPreset::Xi: break;
    }
    throw Error(ErrorCode::UnknownPreset, "xi preset has population ranges, not a point");
}

double xi_min_sum_12(double rho33) {
    if (!(rho33 >= 1.0 / 3.0 - 1e-15 && rho33 <= 0.5)) {
        throw Error(ErrorCode::InvalidPopulations, "xi: rho_33 must lie in [1/3, 1/2]");
    }
    const double s = 1.0 - rho33;
    return 2.0 * s - s * s;
}

double xi_min_sum_23(double rho11) {
    if (!(rho11 >= 0.0 && rho11 <= 1.0 / 3.0 + 1e-15)) {
        throw Error(ErrorCode::InvalidPopulations, "xi: rho_11 must lie in [0, 1/3]");
    }
    const double s = 1.0 - rho11;
    return 2.0 * s - s * s;
}

std::map<SubspacePair, MinSumInterval> preset_min_sums(AtomicPreset preset) {
    std::map<SubspacePair, MinSumInterval> out;
    const auto point = [&](int i, int j, const std::array<double, 3> &pops) {
        const double v = min_uncertainty_sum(pops[i - 1], pops[j - 1]);
        out.emplace(SubspacePair::make(i, j), MinSumInterval{v, v});
    };
    switch (preset) {
    case AtomicPreset::Lambda: {
        const auto pops = preset_populations(preset);
        point(1, 2, pops);
        point(1, 3, pops);
        break;
    }
    case AtomicPreset::Vee: {
        const auto pops = preset_populations(preset);
        point(1, 3, pops);
        point(2, 3, pops);
        break;
    }
    case AtomicPreset::Xi:
        // 2s - s^2 is increasing, so the extremes sit at the range ends.
        out.emplace(SubspacePair::make(1, 2), MinSumInterval{xi_min_sum_12(0.5), xi_min_sum_12(1.0 / 3.0)});
        out.emplace(SubspacePair::make(2, 3), MinSumInterval{xi_min_sum_23(1.0 / 3.0), xi_min_sum_23(0.0)});
        break;
    }
    return out;
}

ContourGrid min_sum_surface(std::size_t grid_n) {
    if (grid_n < 2) {
        throw Error(ErrorCode::InvalidArgument, "grid size must be at least 2");
    }
    ContourGrid g;
    g.x_name = "pop_i";
    g.y_name = "pop_j";
    g.z_name = "min_sum";
    g.x_vals = unit_linspace(grid_n);
    g.y_vals = g.x_vals;
    g.z.reserve(grid_n * grid_n);
    for (double pj : g.y_vals) {
        for (double pi : g.x_vals) {
            g.z.push_back(pi + pj <= 1.0 + 1e-12 ? min_uncertainty_sum(pi, pj) : ContourGrid::invalid);
        }
    }
    return g;
}

} // namespace uncert
