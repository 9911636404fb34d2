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

// Test-side oracles and generators. Nothing here calls into the library's
// formulas; matrices are written out entry by entry and moments are traced
// directly, so agreement with the library is a genuine cross-check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V3 = Eigen::Vector3d;

inline constexpr C I{0.0, 1.0};

inline M mat2(C a, C b, C c, C d) {
    M m(2, 2);
    m << a, b, c, d;
    return m;
}

inline M sx() { return mat2(0.0, 1.0, 1.0, 0.0); }
inline M sy() { return mat2(0.0, -I, I, 0.0); }
inline M sz() { return mat2(1.0, 0.0, 0.0, -1.0); }
inline M id2() { return M::Identity(2, 2); }

inline M kron(const M &a, const M &b) {
    M out = M::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline M dot_sigma(const V3 &a) { return a.x() * sx() + a.y() * sy() + a.z() * sz(); }

inline M qubit_rho(const V3 &r) { return 0.5 * (id2() + dot_sigma(r)); }

/// Pads a square block into the top-left corner of an n x n zero matrix.
inline M pad(const M &block, Eigen::Index n) {
    M out = M::Zero(n, n);
    out.topLeftCorner(block.rows(), block.cols()) = block;
    return out;
}

/// Appended-level qutrit written out entry by entry.
inline M qutrit_rho(double w, const V3 &r) {
    M m = M::Zero(3, 3);
    m(0, 0) = w * (1.0 + r.z()) / 2.0;
    m(0, 1) = w * C(r.x(), -r.y()) / 2.0;
    m(1, 0) = w * C(r.x(), r.y()) / 2.0;
    m(1, 1) = w * (1.0 - r.z()) / 2.0;
    m(2, 2) = 1.0 - w;
    return m;
}

/// sigma_k in levels (i, j), 1-based, as listed for three-level atoms.
inline M sigma_ij(int i, int j, int k) {
    M m = M::Zero(3, 3);
    --i;
    --j;
    if (k == 1) {
        m(i, j) = 1.0;
        m(j, i) = 1.0;
    } else if (k == 2) {
        m(i, j) = -I;
        m(j, i) = I;
    } else {
        m(i, i) = 1.0;
        m(j, j) = -1.0;
    }
    return m;
}

inline double tr_re(const M &m) { return m.trace().real(); }

inline double mean(const M &rho, const M &a) { return tr_re(rho * a); }

inline double var(const M &rho, const M &a) {
    const double mu = mean(rho, a);
    return tr_re(rho * a * a) - mu * mu;
}

inline double max_abs(const M &m) { return m.cwiseAbs().maxCoeff(); }

/// Two-qubit image of the appended qutrit, written entry by entry.
inline M two_qubit_rho(double w, const V3 &r) {
    M m = M::Zero(4, 4);
    m(0, 0) = w * (1.0 + r.z()) / 2.0;
    m(0, 3) = w * C(r.x(), -r.y()) / 2.0;
    m(3, 0) = w * C(r.x(), r.y()) / 2.0;
    m(3, 3) = w * (1.0 - r.z()) / 2.0;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) m(i, j) = (1.0 - w) / 2.0;
    return m;
}

/// Wootters concurrence from the eigenvalues of the non-Hermitian product
/// rho (sy x sy) rho^* (sy x sy).
inline double wootters(const M &rho) {
    const M yy = kron(sy(), sy());
    const M tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<M> es(rho * tilde);
    std::vector<double> s;
    for (Eigen::Index k = 0; k < 4; ++k) s.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(k).real())));
    std::sort(s.rbegin(), s.rend());
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

/// Independent generator (std distributions, not the library's RNG).
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    double uni(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    double gauss() { return normal_(eng_); }

    V3 unit() {
        V3 v;
        do {
            v = V3(gauss(), gauss(), gauss());
        } while (v.norm() < 1e-6);
        return v.normalized();
    }

    V3 ball() { return std::cbrt(uni()) * unit(); }

    /// Orthonormal pair (a, b).
    std::pair<V3, V3> frame() {
        const V3 a = unit();
        V3 b = unit();
        b = (b - b.dot(a) * a).normalized();
        return {a, b};
    }

    /// Random density matrix: G G^dagger normalised, with mixed ranks.
    M density(int n) {
        const int rank = 1 + static_cast<int>(uni() * n);
        M g(n, rank);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < rank; ++k) g(i, k) = C(gauss(), gauss());
        M rho = g * g.adjoint();
        rho /= rho.trace().real();
        return 0.5 * (rho + rho.adjoint());
    }

    M hermitian(int n) {
        M g(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) g(i, k) = C(gauss(), gauss());
        return 0.5 * (g + g.adjoint());
    }

  private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_;
};

/// Fibonacci lattice on the unit sphere.
inline std::vector<V3> fibonacci_sphere(int n) {
    std::vector<V3> out;
    out.reserve(n);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        out.emplace_back(rho * std::cos(golden * k), rho * std::sin(golden * k), z);
    }
    return out;
}

struct BoundarySample {
    double d1_target;
    double d1_attained; // d1 of the minimising state, NaN if the band is empty
    double d2_min;      // NaN if the band is empty
};

/// Brute-force lower edge of the qutrit region with A1 = sigma_x (+) 0 and
/// A2 = sigma_y (+) 0: for each target d1, the smallest d2 over states whose
/// d1 lies within `band` of the target. Variances come from explicit traces.
inline std::vector<BoundarySample> qutrit_boundary_brute_force(int abscissae, int omega_steps, int sphere_n,
                                                               double band) {
    std::vector<BoundarySample> out(abscissae);
    for (int k = 0; k < abscissae; ++k) {
        out[k] = {static_cast<double>(k) / (abscissae - 1), std::nan(""), std::nan("")};
    }
    const auto dirs = fibonacci_sphere(sphere_n);
    using M3 = Eigen::Matrix3cd;
    const M3 a1 = pad(sx(), 3);
    const M3 a2 = pad(sy(), 3);
    const M3 a1sq = a1 * a1;
    const M3 a2sq = a2 * a2;
    auto tr = [](const M3 &m) { return m.trace().real(); };
    for (int s = 0; s <= omega_steps; ++s) {
        // Quadratic spacing keeps small d1 ~ sqrt(omega) covered.
        const double u = static_cast<double>(s) / omega_steps;
        const double w = u * u;
        for (const auto &r : dirs) {
            const M3 rho = qutrit_rho(w, r);
            const double m1 = tr(rho * a1), m2 = tr(rho * a2);
            const double d1 = std::sqrt(std::max(0.0, tr(rho * a1sq) - m1 * m1));
            const double d2 = std::sqrt(std::max(0.0, tr(rho * a2sq) - m2 * m2));
            const int lo = std::max(0, static_cast<int>(std::ceil((d1 - band) * (abscissae - 1))));
            const int hi = std::min(abscissae - 1, static_cast<int>(std::floor((d1 + band) * (abscissae - 1))));
            for (int k = lo; k <= hi; ++k) {
                if (std::abs(d1 - out[k].d1_target) > band) continue;
                if (std::isnan(out[k].d2_min) || d2 < out[k].d2_min) {
                    out[k].d2_min = d2;
                    out[k].d1_attained = d1;
                }
            }
        }
    }
    return out;
}

} // namespace oracle
