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

#include "uncert/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "uncert/atomic.hpp"
#include "uncert/core.hpp"
#include "uncert/entanglement.hpp"
#include "uncert/io.hpp"
#include "uncert/qubit.hpp"
#include "uncert/qutrit.hpp"
#include "uncert/region.hpp"
#include "uncert/symmetric.hpp"

namespace uncert {

std::size_t SuiteResult::passed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; }));
}

std::size_t SuiteResult::failed_count() const { return checks.size() - passed_count(); }

namespace {

constexpr std::size_t kDraws = 10000;

/// Records one check; `worst` is the largest violation measure observed.
class Recorder {
  public:
    explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

    void check(std::string name, bool ok, const std::string &detail = {}) {
        result_.checks.push_back({std::move(name), ok, detail});
    }

    void within(std::string name, double worst, double tolerance) {
        check(std::move(name), worst <= tolerance,
              "max residual " + io::format_number(worst) + " (tolerance " + io::format_number(tolerance) + ")");
    }

    /// Runs body; an exception counts as a failure.
    void guarded(const std::string &name, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            check(name, false, std::string("threw: ") + e.what());
        }
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

ComplexMatrix ginibre(Eigen::Index dim, Rng &rng) {
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            g(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    return g;
}

DensityMatrix random_state(Eigen::Index dim, Rng &rng) {
    ComplexMatrix g = ginibre(dim, rng);
    // Occasionally rank-1 to exercise the pure edge.
    if (rng.uniform() < 0.2) {
        g.rightCols(dim - 1).setZero();
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::make(std::move(rho));
}

Observable random_observable(Eigen::Index dim, Rng &rng) {
    const ComplexMatrix g = ginibre(dim, rng);
    return Observable::make(0.5 * (g + g.adjoint()));
}

std::pair<PauliDirection, PauliDirection> random_frame(Rng &rng) {
    const Vec3 a = rng.unit_vector();
    Vec3 b = rng.unit_vector();
    b = b - b.dot(a) * a;
    b.normalize();
    return {PauliDirection::make(a), PauliDirection::make(b)};
}

AppendedQutrit random_qutrit(Rng &rng) {
    return AppendedQutrit::make(rng.uniform(), BlochVector::from(rng.unit_vector()));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

SuiteResult suite_core(std::uint64_t seed) {
    Recorder rec("core");
    Rng rng(seed ^ 0x636f7265ULL);

    rec.guarded("density validation examples", [&] {
        ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
        pure(0, 0) = 1.0;
        make_density(pure);
        make_density(0.5 * ComplexMatrix::Identity(2, 2));
        ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
        bad.diagonal() << 0.6, 0.6, -0.2;
        bool rejected = false;
        try {
            make_density(bad);
        } catch (const Error &e) {
            rejected = e.code() == ErrorCode::NotPSD;
        }
        rec.check("density validation examples", rejected);
    });

    rec.guarded("robertson inequality", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < kDraws; ++k) {
            const Eigen::Index dim = 2 + static_cast<Eigen::Index>(k % 3);
            const auto rho = random_state(dim, rng);
            const auto t = robertson_bound(rho, random_observable(dim, rng), random_observable(dim, rng));
            worst = std::max(worst, t.rhs - t.lhs);
        }
        rec.within("robertson inequality", worst, 1e-10);
    });

    rec.guarded("variance sum consistency", [&] {
        double worst = 0.0;
        bool nonneg = true;
        for (std::size_t k = 0; k < kDraws / 10; ++k) {
            const auto rho = random_state(3, rng);
            const std::vector<Observable> obs{random_observable(3, rng), random_observable(3, rng),
                                              random_observable(3, rng)};
            const auto rep = sum_uncertainty(rho, obs);
            double total = 0.0;
            for (const auto &o : obs) {
                const double v = variance(rho, o);
                nonneg = nonneg && v >= 0.0;
                total += v;
            }
            worst = std::max(worst, std::abs(total - rep.sum_of_variances));
        }
        rec.check("variances nonnegative", nonneg);
        rec.within("variance sum consistency", worst, 0.0);
    });

    rec.guarded("eigenvalue trace and determinant", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < 1000; ++k) {
            const Eigen::Index dim = 2 + static_cast<Eigen::Index>(k % 3);
            const ComplexMatrix h = random_observable(dim, rng).matrix();
            const auto ev = hermitian_eigenvalues(h);
            double sum = 0.0;
            double prod = 1.0;
            for (double l : ev) {
                sum += l;
                prod *= l;
            }
            const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
            worst = std::max(worst, std::abs(sum - h.trace().real()) / scale);
            worst = std::max(worst, std::abs(prod - h.determinant().real()) / std::pow(scale, double(dim)));
        }
        rec.within("eigenvalue trace and determinant", worst, 1e-9);
    });

    rec.guarded("kron mixed product", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < 1000; ++k) {
            const ComplexMatrix a = ginibre(2, rng), b = ginibre(2, rng), c = ginibre(2, rng), d = ginibre(2, rng);
            worst = std::max(worst, max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)));
        }
        rec.within("kron mixed product", worst, 1e-12);
    });

    rec.guarded("ball sampling radial moment", [&] {
        Rng sampler(seed);
        double acc = 0.0;
        double worst_pure = 0.0;
        constexpr std::size_t n = 100000;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = sample_qubit_state(SampleMode::BallUniform, sampler).norm();
            acc += r * r * r;
            worst_pure = std::max(worst_pure, std::abs(sample_qubit_state(SampleMode::PureUniform, sampler).norm() - 1.0));
        }
        rec.within("ball sampling radial moment", std::abs(acc / n - 0.5), 0.01);
        rec.within("pure sampling normalisation", worst_pure, 1e-12);
    });

    return rec.take();
}

SuiteResult suite_regions(std::uint64_t seed) {
    Recorder rec("regions");
    Rng rng(seed ^ 0x7265676eULL);
    const auto ax = PauliDirection::make(1.0, 0.0, 0.0);
    const auto ay = PauliDirection::make(0.0, 1.0, 0.0);

    rec.guarded("qubit sum bound", [&] {
        double min_sum = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < 100000; ++k) {
            const auto r = sample_qubit_state(SampleMode::BallUniform, rng);
            min_sum = std::min(min_sum, qubit_variance_pair(r, ax, ay).sum_of_variances);
        }
        rec.check("qubit sum bound", min_sum >= 1.0 - 1e-10, "min sum " + io::format_number(min_sum));
        const double sat = qubit_variance_pair({1.0, 0.0, 0.0}, ax, ay).sum_of_variances;
        rec.within("qubit saturation at r = a", std::abs(sat - 1.0), 1e-15);
    });

    rec.guarded("qubit region samples", [&] {
        bool ok = true;
        for (const auto &p : sample_qubit_region(100000, seed)) {
            ok = ok && qubit_region_contains(p.d1, p.d2);
        }
        rec.check("qubit region samples", ok);
    });

    rec.guarded("qutrit region above boundary", [&] {
        double worst = 0.0;
        bool origin = false;
        for (const auto &p : sample_qutrit_region(kDraws, seed)) {
            worst = std::max(worst, qutrit_boundary_min(p.d1) - p.d2);
            worst = std::max(worst, qutrit_boundary_min(p.d2) - p.d1);
            origin = origin || (p.d1 == 0.0 && p.d2 == 0.0);
        }
        rec.within("qutrit region above boundary", worst, 1e-6);
        rec.check("qutrit origin attained", origin);
    });

    rec.guarded("qutrit formula vs trace", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < kDraws; ++k) {
            const auto q = random_qutrit(rng);
            const auto [a, b] = random_frame(rng);
            const auto rep = qutrit_variance_pair(q, a, b);
            const auto rho = appended_qutrit_density(q);
            worst = std::max(worst, std::abs(rep.variances[0] - variance(rho, embedded_observable(a))));
            worst = std::max(worst, std::abs(rep.variances[1] - variance(rho, embedded_observable(b))));
        }
        rec.within("qutrit formula vs trace", worst, 1e-12);
    });

    rec.guarded("qutrit boundary brute force", [&] {
        // omega_k = (k/400)^2 so that small dA1 bands are populated.
        constexpr int n_omega = 401;
        constexpr std::size_t n_dirs = 20000;
        std::vector<double> best(101, std::numeric_limits<double>::infinity());
        std::vector<double> best_d1(101, 0.0);
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t i = 0; i < n_dirs; ++i) {
            const double z = 1.0 - (2.0 * double(i) + 1.0) / double(n_dirs);
            const double rho = std::sqrt(1.0 - z * z);
            const double x = rho * std::cos(golden * double(i));
            const double y = rho * std::sin(golden * double(i));
            for (int k = 0; k < n_omega; ++k) {
                const double w = std::pow(double(k) / (n_omega - 1), 2);
                const double d1 = std::sqrt(std::max(0.0, w - w * w * x * x));
                const double d2 = std::sqrt(std::max(0.0, w - w * w * y * y));
                const int lo = std::max(0, static_cast<int>(std::ceil((d1 - 0.005) * 100.0 - 1e-9)));
                const int hi = std::min(100, static_cast<int>(std::floor((d1 + 0.005) * 100.0 + 1e-9)));
                for (int c = lo; c <= hi; ++c) {
                    if (std::abs(d1 - c / 100.0) <= 0.005 && d2 < best[c]) {
                        best[c] = d2;
                        best_d1[c] = d1;
                    }
                }
            }
        }
        double worst = 0.0;
        for (int c = 0; c <= 100; ++c) {
            worst = std::max(worst, std::abs(best[c] - qutrit_boundary_min(std::min(1.0, best_d1[c]))));
        }
        rec.within("qutrit boundary brute force", worst, 0.01);
    });

    rec.guarded("contour implication", [&] {
        const auto sum = contour_sum(200);
        const auto conc = contour_concurrence(200);
        bool implication = true;
        bool converse_witness = false;
        for (std::size_t i = 0; i < sum.z.size(); ++i) {
            if (sum.z[i] < 0.75 && !(conc.z[i] > 0.0)) implication = false;
            if (sum.z[i] >= 0.75 && conc.z[i] > 0.0) converse_witness = true;
        }
        rec.check("sum below 3/4 implies entangled", implication);
        rec.check("entangled with sum at least 3/4 exists", converse_witness);
    });

    return rec.take();
}

SuiteResult suite_atomic(std::uint64_t seed) {
    Recorder rec("atomic");
    Rng rng(seed ^ 0x61746f6dULL);
    const auto p12 = SubspacePair::make(1, 2);
    const auto p13 = SubspacePair::make(1, 3);
    const auto p23 = SubspacePair::make(2, 3);

    rec.guarded("preset values", [&] {
        auto lam = preset_min_sums(AtomicPreset::Lambda);
        auto vee = preset_min_sums(AtomicPreset::Vee);
        auto xi = preset_min_sums(AtomicPreset::Xi);
        double worst = 0.0;
        worst = std::max(worst, std::abs(lam.at(p12).lo - 0.75));
        worst = std::max(worst, std::abs(lam.at(p13).lo - 0.75));
        worst = std::max(worst, std::abs(vee.at(p13).lo - 0.84));
        worst = std::max(worst, std::abs(vee.at(p23).lo - 0.96));
        worst = std::max(worst, std::abs(xi.at(p12).lo - 0.75));
        worst = std::max(worst, std::abs(xi.at(p12).hi - 8.0 / 9.0));
        worst = std::max(worst, std::abs(xi.at(p23).lo - 8.0 / 9.0));
        worst = std::max(worst, std::abs(xi.at(p23).hi - 1.0));
        rec.within("preset values", worst, 1e-12);
    });

    rec.guarded("subspace Pauli closure", [&] {
        double worst = 0.0;
        for (const auto pair : {p12, p13, p23}) {
            ComplexMatrix proj = ComplexMatrix::Zero(3, 3);
            proj(pair.i() - 1, pair.i() - 1) = 1.0;
            proj(pair.j() - 1, pair.j() - 1) = 1.0;
            for (int k = 0; k < 100; ++k) {
                const auto a = PauliDirection::make(rng.unit_vector());
                const ComplexMatrix m = subspace_observable(pair, a).matrix();
                worst = std::max(worst, max_abs_diff(m * m, proj));
            }
        }
        rec.within("subspace Pauli closure", worst, 1e-12);
    });

    rec.guarded("population formula vs trace", [&] {
        double worst = 0.0;
        double worst_norm = 0.0;
        for (std::size_t k = 0; k < kDraws; ++k) {
            const auto rho = random_state(3, rng);
            const auto pair = std::array{p12, p13, p23}[k % 3];
            const auto [a, b] = random_frame(rng);
            const auto rep = atomic_uncertainty_sum(rho, pair, a, b);
            const double trace_sum =
                variance(rho, subspace_observable(pair, a)) + variance(rho, subspace_observable(pair, b));
            worst = std::max(worst, std::abs(rep.sum_of_variances - trace_sum));
            const auto natural = atomic_uncertainty_sum(rho, pair);
            const auto n = subspace_bloch(rho, pair);
            const double pops = rho(pair.i() - 1, pair.i() - 1).real() + rho(pair.j() - 1, pair.j() - 1).real();
            worst = std::max(worst, std::abs(natural.sum_of_variances - (2.0 * pops - n.vec().squaredNorm())));
            worst_norm = std::max(worst_norm, n.norm() - pops);
        }
        rec.within("population formula vs trace", worst, 1e-10);
        rec.within("subspace Bloch norm bound", worst_norm, 1e-10);
    });

    rec.guarded("minimum over coherences", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < kDraws; ++k) {
            const double pi = rng.uniform();
            const double pj = rng.uniform() * (1.0 - pi);
            // Admissible coherence: |rho_ij| <= sqrt(pi pj).
            const double mag = std::sqrt(pi * pj) * std::sqrt(rng.uniform());
            const double n2 = 4.0 * mag * mag + (pi - pj) * (pi - pj);
            const double sum = 2.0 * (pi + pj) - n2;
            worst = std::max(worst, min_uncertainty_sum(pi, pj) - sum);
        }
        rec.within("minimum over coherences", worst, 1e-10);
        // Balanced populations 0.3, 0.3 with the largest coherence |rho_ij| = 0.3.
        const double attained = 2.0 * 0.6 - 4.0 * 0.3 * 0.3;
        rec.within("minimum attained at balanced saturation", std::abs(attained - min_uncertainty_sum(0.3, 0.3)), 1e-10);
    });

    rec.guarded("min sum monotone", [&] {
        bool ok = true;
        double prev = -1.0;
        for (int k = 0; k <= 1000; ++k) {
            const double s = k / 1000.0;
            const double v = min_uncertainty_sum(s / 2.0, s / 2.0);
            ok = ok && v > prev && (k == 1000 || v < 1.0);
            prev = v;
        }
        rec.check("min sum monotone", ok);
    });

    return rec.take();
}

SuiteResult suite_map(std::uint64_t seed) {
    Recorder rec("map");
    Rng rng(seed ^ 0x6d6170ULL);
    const auto ax = PauliDirection::make(1.0, 0.0, 0.0);
    const auto ay = PauliDirection::make(0.0, 1.0, 0.0);

    rec.guarded("coupling unitary", [&] {
        const ComplexMatrix u = coupling_unitary();
        const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
        rec.within("coupling unitary", std::max(max_abs_diff(u.adjoint() * u, id), max_abs_diff(u * u.adjoint(), id)),
                   1e-15);
    });

    rec.guarded("transformed observables", [&] {
        const auto [t1, t2] = transformed_observables();
        const ComplexMatrix u = coupling_unitary();
        ComplexMatrix a1 = ComplexMatrix::Zero(4, 4), a2 = ComplexMatrix::Zero(4, 4);
        a1.topLeftCorner(2, 2) = pauli::x();
        a2.topLeftCorner(2, 2) = pauli::y();
        rec.within("transformed observables",
                   std::max(max_abs_diff(u.adjoint() * a1 * u, t1.matrix()), max_abs_diff(u.adjoint() * a2 * u, t2.matrix())),
                   1e-15);
    });

    rec.guarded("two-qubit equivalence", [&] {
        const auto [t1, t2] = transformed_observables();
        const ComplexMatrix u = coupling_unitary();
        double round_trip = 0.0, spectrum = 0.0, moments = 0.0, swap = 0.0, kappa = 0.0, reports = 0.0;
        const ComplexMatrix sw = swap_operator();
        for (std::size_t k = 0; k < kDraws; ++k) {
            const auto q = random_qutrit(rng);
            const auto rho_ab = qutrit_to_two_qubit(q);
            round_trip = std::max(round_trip, max_abs_diff(reconstruct_two_qubit(extract_params(rho_ab)), rho_ab.matrix()));
            swap = std::max(swap, max_abs_diff(sw * rho_ab.matrix() * sw, rho_ab.matrix()));

            const ComplexMatrix embedded = embed_qutrit(q);
            const auto e1 = hermitian_eigenvalues(embedded);
            const auto e2 = hermitian_eigenvalues(rho_ab.matrix());
            for (std::size_t i = 0; i < e1.size(); ++i) spectrum = std::max(spectrum, std::abs(e1[i] - e2[i]));

            ComplexMatrix a1 = ComplexMatrix::Zero(4, 4);
            a1.topLeftCorner(2, 2) = pauli::x();
            for (int power = 1; power <= 2; ++power) {
                ComplexMatrix lhs_op = ComplexMatrix::Identity(4, 4), rhs_op = ComplexMatrix::Identity(4, 4);
                for (int p = 0; p < power; ++p) {
                    lhs_op = lhs_op * t1.matrix();
                    rhs_op = rhs_op * a1;
                }
                const Complex lhs = (rho_ab.matrix() * lhs_op).trace();
                const Complex rhs = (embedded * rhs_op).trace();
                moments = std::max(moments, std::abs(lhs - rhs));
            }

            const auto two = two_qubit_uncertainty(q);
            const auto one = qutrit_variance_pair(q, ax, ay);
            const auto traced = std::array{variance(rho_ab, t1), variance(rho_ab, t2)};
            for (int i = 0; i < 2; ++i) {
                reports = std::max(reports, std::abs(two.variances[i] - one.variances[i]));
                reports = std::max(reports, std::abs(two.variances[i] - traced[i]));
            }
            kappa = std::max(kappa, std::abs(uncertainty_sum_kappa(KappaOmega::of(q)) - two.sum_of_variances));
        }
        rec.within("parameter round trip", round_trip, 1e-12);
        rec.within("permutation symmetry", swap, 1e-12);
        rec.within("spectrum preserved", spectrum, 1e-12);
        rec.within("observable moments preserved", moments, 1e-12);
        rec.within("variance reports agree", reports, 1e-12);
        rec.within("kappa sum agrees", kappa, 1e-12);
    });

    return rec.take();
}

SuiteResult suite_entanglement(std::uint64_t seed) {
    Recorder rec("entanglement");
    Rng rng(seed ^ 0x656e74ULL);

    rec.guarded("concurrence triple agreement", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < kDraws; ++k) {
            const auto q = random_qutrit(rng);
            const auto rho = qutrit_to_two_qubit(q);
            const double g = concurrence_general(rho).value;
            const double x = concurrence_x_state(rho);
            const double f = concurrence_kappa_omega(KappaOmega::of(q));
            worst = std::max({worst, std::abs(g - x), std::abs(g - f), std::abs(x - f)});
        }
        rec.within("concurrence triple agreement", worst, 1e-8);
    });

    const auto random_ensemble = [&](std::size_t terms) {
        std::vector<EnsembleTerm> t(terms);
        double total = 0.0;
        for (auto &term : t) {
            term.p = rng.uniform() + 1e-3;
            term.s_hat = rng.unit_vector();
            total += term.p;
        }
        for (auto &term : t) term.p /= total;
        // Absorb rounding into the last weight.
        double rest = 1.0;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) rest -= t[i].p;
        t.back().p = rest;
        return SeparableEnsemble::make(std::move(t));
    };

    rec.guarded("separable states unentangled", [&] {
        double worst = 0.0;
        for (std::size_t k = 0; k < 1000; ++k) {
            worst = std::max(worst, concurrence_general(separable_state(random_ensemble(1 + k % 8))).value);
        }
        rec.within("separable states unentangled", worst, 1e-8);
    });

    rec.guarded("separable bound", [&] {
        double min_avg = std::numeric_limits<double>::infinity();
        double min_mix = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < kDraws; ++k) {
            const auto e = random_ensemble(1 + k % 8);
            min_avg = std::min(min_avg, separable_uncertainty_sum(e));
            if (k % 10 == 0) min_mix = std::min(min_mix, separable_mixture_variance_sum(e));
        }
        rec.check("separable sum at least 3/4", min_avg >= 0.75 - 1e-12, "min " + io::format_number(min_avg));
        rec.check("separable mixture variance at least 3/4", min_mix >= 0.75 - 1e-12, "min " + io::format_number(min_mix));
        rec.within("separable bound oracle", std::abs(separable_bound_oracle(100001) - 0.75), 1e-9);
    });

    rec.guarded("entanglement precision link", [&] {
        bool implication = true;
        bool witness = false;
        for (int i = 0; i <= 316; ++i) {
            for (int j = 0; j <= 316; ++j) {
                const auto ko = KappaOmega::make(i / 316.0, j / 316.0);
                const double s = uncertainty_sum_kappa(ko);
                const double c = concurrence_kappa_omega(ko);
                if (s < 0.75 && !(c > 0.0)) implication = false;
                if (s >= 0.75 && c > 0.0) witness = true;
            }
        }
        rec.check("sum below 3/4 implies entangled", implication);
        rec.check("entangled with sum at least 3/4 exists", witness);
        for (double kappa : {0.0, 0.5, 1.0}) {
            const auto ko = KappaOmega::make(0.0, kappa);
            if (concurrence_kappa_omega(ko) != 1.0 || uncertainty_sum_kappa(ko) != 0.0) {
                rec.check("maximal entanglement at omega = 0", false);
                return;
            }
        }
        rec.check("maximal entanglement at omega = 0", true);
    });

    return rec.take();
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

struct SuiteEntry {
    const char *name;
    SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"core", suite_core}, {"regions", suite_regions}, {"atomic", suite_atomic},
    {"map", suite_map},   {"entanglement", suite_entanglement},
};

} // namespace

const std::vector<std::string> &verification_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &s : kSuites) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

std::vector<SuiteResult> run_verification(std::string_view suite, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto &s : kSuites) {
        if (suite == "all" || suite == s.name) {
            out.push_back(s.fn(seed));
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "unknown verification suite '" + std::string(suite) + "'");
    }
    return out;
}

} // namespace uncert
