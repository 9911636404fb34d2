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

#include "uncert/uncert.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "uncert/atomic.hpp"
#include "uncert/core.hpp"
#include "uncert/entanglement.hpp"
#include "uncert/io.hpp"
#include "uncert/qubit.hpp"
#include "uncert/qutrit.hpp"
#include "uncert/region.hpp"
#include "uncert/symmetric.hpp"
#include "uncert/verify.hpp"

struct uncert_state {
    uncert::DensityMatrix rho;
};

struct uncert_observable {
    uncert::Observable obs;
};

struct uncert_points {
    std::vector<uncert::RegionPoint> points;
};

struct uncert_grid {
    uncert::ContourGrid grid;
};

struct uncert_verify_result {
    std::vector<uncert::SuiteResult> suites;
};

namespace {

thread_local std::string g_last_error;

uncert_status to_status(uncert::ErrorCode code) {
    using uncert::ErrorCode;
    switch (code) {
    case ErrorCode::NotHermitian: return UNCERT_E_NOT_HERMITIAN;
    case ErrorCode::TraceNotOne: return UNCERT_E_TRACE_NOT_ONE;
    case ErrorCode::NotPSD: return UNCERT_E_NOT_PSD;
    case ErrorCode::DimMismatch: return UNCERT_E_DIM_MISMATCH;
    case ErrorCode::EmptyObservableList: return UNCERT_E_EMPTY_OBSERVABLE_LIST;
    case ErrorCode::BlochNormExceeded: return UNCERT_E_BLOCH_NORM_EXCEEDED;
    case ErrorCode::NotUnitVector: return UNCERT_E_NOT_UNIT_VECTOR;
    case ErrorCode::NotOrthogonal: return UNCERT_E_NOT_ORTHOGONAL;
    case ErrorCode::OutOfRange: return UNCERT_E_OUT_OF_RANGE;
    case ErrorCode::InvalidOmega: return UNCERT_E_INVALID_OMEGA;
    case ErrorCode::NotUnitBloch: return UNCERT_E_NOT_UNIT_BLOCH;
    case ErrorCode::InvalidPair: return UNCERT_E_INVALID_PAIR;
    case ErrorCode::InvalidAxis: return UNCERT_E_INVALID_AXIS;
    case ErrorCode::InvalidPopulations: return UNCERT_E_INVALID_POPULATIONS;
    case ErrorCode::UnknownPreset: return UNCERT_E_UNKNOWN_PRESET;
    case ErrorCode::NotSymmetricState: return UNCERT_E_NOT_SYMMETRIC_STATE;
    case ErrorCode::NotXState: return UNCERT_E_NOT_X_STATE;
    case ErrorCode::InvalidEnsemble: return UNCERT_E_INVALID_ENSEMBLE;
    case ErrorCode::EigenFailure: return UNCERT_E_EIGEN_FAILURE;
    case ErrorCode::InvalidArgument: return UNCERT_E_INVALID_ARGUMENT;
    case ErrorCode::Io: return UNCERT_E_IO;
    }
    return UNCERT_E_INTERNAL;
}

uncert_status fail(uncert_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

/// Runs body, translating exceptions into status codes.
template <class F>
uncert_status guard(F &&body) {
    try {
        body();
        g_last_error.clear();
        return UNCERT_OK;
    } catch (const uncert::Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(UNCERT_E_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UNCERT_E_INTERNAL, e.what());
    } catch (...) {
        return fail(UNCERT_E_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw uncert::Error(uncert::ErrorCode::InvalidArgument, what);
    }
}

uncert::ComplexMatrix read_matrix(size_t dim, const double *entries) {
    require(dim > 0 && entries != nullptr, "matrix dimension must be positive and entries non-null");
    const auto n = static_cast<Eigen::Index>(dim);
    uncert::ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const size_t k = 2 * static_cast<size_t>(i * n + j);
            m(i, j) = uncert::Complex(entries[k], entries[k + 1]);
        }
    }
    return m;
}

void write_matrix(const uncert::ComplexMatrix &m, double *entries) {
    require(entries != nullptr, "output buffer is null");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const size_t k = 2 * static_cast<size_t>(i * m.cols() + j);
            entries[k] = m(i, j).real();
            entries[k + 1] = m(i, j).imag();
        }
    }
}

uncert::BlochVector read_bloch(const double r[3]) {
    require(r != nullptr, "vector is null");
    return {r[0], r[1], r[2]};
}

uncert::PauliDirection read_direction(const double a[3]) {
    require(a != nullptr, "direction is null");
    return uncert::PauliDirection::make(a[0], a[1], a[2]);
}

uncert::SubspacePair read_pair(int pair) { return uncert::SubspacePair::make(pair / 10, pair % 10); }

void write_report(const uncert::UncertaintyReport &rep, uncert_pair_report *out) {
    require(out != nullptr && rep.variances.size() == 2, "report output is null");
    for (int k = 0; k < 2; ++k) {
        out->means[k] = rep.means[k];
        out->second_moments[k] = rep.second_moments[k];
        out->variances[k] = rep.variances[k];
    }
    out->sum_of_variances = rep.sum_of_variances;
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

uncert::SeparableEnsemble read_ensemble(size_t n, const double *p, const double *s_hats) {
    require(n > 0 && p != nullptr && s_hats != nullptr, "ensemble arrays are null or empty");
    std::vector<uncert::EnsembleTerm> terms(n);
    for (size_t k = 0; k < n; ++k) {
        terms[k].p = p[k];
        terms[k].s_hat = uncert::Vec3(s_hats[3 * k], s_hats[3 * k + 1], s_hats[3 * k + 2]);
    }
    return uncert::SeparableEnsemble::make(std::move(terms));
}

template <class T, class... Args>
void emplace_out(T **out, Args &&...args) {
    require(out != nullptr, "output handle pointer is null");
    *out = new T{std::forward<Args>(args)...};
}

} // namespace

extern "C" {

UNCERT_API const char *uncert_last_error(void) { return g_last_error.c_str(); }

UNCERT_API const char *uncert_status_name(uncert_status status) {
    switch (status) {
    case UNCERT_OK: return "OK";
    case UNCERT_E_INTERNAL: return "Internal";
    default:
        if (status >= UNCERT_E_NOT_HERMITIAN && status <= UNCERT_E_IO) {
            return uncert::error_code_name(static_cast<uncert::ErrorCode>(status));
        }
        return "Unknown";
    }
}

UNCERT_API void uncert_string_free(char *s) { std::free(s); }

UNCERT_API const char *uncert_version(void) { return "1.0.0"; }

UNCERT_API uncert_status uncert_state_create(size_t dim, const double *entries, uncert_state **out) {
    return guard([&] { emplace_out(out, uncert::DensityMatrix::make(read_matrix(dim, entries))); });
}

UNCERT_API uncert_status uncert_state_from_bloch(const double r[3], uncert_state **out) {
    return guard([&] { emplace_out(out, uncert::bloch_to_density(read_bloch(r))); });
}

UNCERT_API uncert_status uncert_state_appended_qutrit(double omega, const double r[3], uncert_state **out) {
    return guard([&] {
        emplace_out(out, uncert::appended_qutrit_density(uncert::AppendedQutrit::make(omega, read_bloch(r))));
    });
}

UNCERT_API uncert_status uncert_state_two_qubit_from_qutrit(double omega, const double r[3], uncert_state **out) {
    return guard([&] {
        emplace_out(out, uncert::qutrit_to_two_qubit(uncert::AppendedQutrit::make(omega, read_bloch(r))));
    });
}

UNCERT_API uncert_status uncert_state_separable(size_t n, const double *p, const double *s_hats,
                                                uncert_state **out) {
    return guard([&] { emplace_out(out, uncert::separable_state(read_ensemble(n, p, s_hats))); });
}

UNCERT_API void uncert_state_destroy(uncert_state *state) { delete state; }

UNCERT_API size_t uncert_state_dim(const uncert_state *state) {
    return state == nullptr ? 0 : static_cast<size_t>(state->rho.dim());
}

UNCERT_API uncert_status uncert_state_entries(const uncert_state *state, double *entries) {
    return guard([&] {
        require(state != nullptr, "state is null");
        write_matrix(state->rho.matrix(), entries);
    });
}

UNCERT_API uncert_status uncert_observable_create(size_t dim, const double *entries, uncert_observable **out) {
    return guard([&] { emplace_out(out, uncert::Observable::make(read_matrix(dim, entries))); });
}

UNCERT_API uncert_status uncert_observable_pauli(const double a[3], uncert_observable **out) {
    return guard([&] { emplace_out(out, uncert::pauli_observable(read_direction(a))); });
}

UNCERT_API uncert_status uncert_observable_embedded(const double a[3], uncert_observable **out) {
    return guard([&] { emplace_out(out, uncert::embedded_observable(read_direction(a))); });
}

UNCERT_API uncert_status uncert_observable_sigma_ij(int pair, int axis, uncert_observable **out) {
    return guard([&] { emplace_out(out, uncert::sigma_ij(read_pair(pair), axis)); });
}

UNCERT_API uncert_status uncert_observable_transformed(int which, uncert_observable **out) {
    return guard([&] {
        require(which == 1 || which == 2, "transformed observable index must be 1 or 2");
        auto [a1, a2] = uncert::transformed_observables();
        emplace_out(out, which == 1 ? a1 : a2);
    });
}

UNCERT_API void uncert_observable_destroy(uncert_observable *obs) { delete obs; }

UNCERT_API size_t uncert_observable_dim(const uncert_observable *obs) {
    return obs == nullptr ? 0 : static_cast<size_t>(obs->obs.dim());
}

UNCERT_API uncert_status uncert_expectation(const uncert_state *rho, const uncert_observable *a, double *out) {
    return guard([&] {
        require(rho && a && out, "null argument");
        *out = uncert::expectation(rho->rho, a->obs);
    });
}

UNCERT_API uncert_status uncert_variance(const uncert_state *rho, const uncert_observable *a, double *out) {
    return guard([&] {
        require(rho && a && out, "null argument");
        *out = uncert::variance(rho->rho, a->obs);
    });
}

UNCERT_API uncert_status uncert_sum_uncertainty(const uncert_state *rho, const uncert_observable *const *obs,
                                                size_t n, double *variances, double *sum) {
    return guard([&] {
        require(rho && sum && (n == 0 || obs), "null argument");
        std::vector<uncert::Observable> list;
        list.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            require(obs[k] != nullptr, "null observable in list");
            list.push_back(obs[k]->obs);
        }
        const auto rep = uncert::sum_uncertainty(rho->rho, list);
        if (variances != nullptr) {
            std::copy(rep.variances.begin(), rep.variances.end(), variances);
        }
        *sum = rep.sum_of_variances;
    });
}

UNCERT_API uncert_status uncert_robertson_bound(const uncert_state *rho, const uncert_observable *a1,
                                                const uncert_observable *a2, double *lhs, double *rhs) {
    return guard([&] {
        require(rho && a1 && a2 && lhs && rhs, "null argument");
        const auto t = uncert::robertson_bound(rho->rho, a1->obs, a2->obs);
        *lhs = t.lhs;
        *rhs = t.rhs;
    });
}

UNCERT_API uncert_status uncert_hermitian_eigenvalues(size_t dim, const double *entries, double *eigenvalues) {
    return guard([&] {
        require(eigenvalues != nullptr, "null argument");
        const auto ev = uncert::hermitian_eigenvalues(read_matrix(dim, entries));
        std::copy(ev.begin(), ev.end(), eigenvalues);
    });
}

UNCERT_API uncert_status uncert_sample_qubit_state(int pure, uint64_t seed, double r[3]) {
    return guard([&] {
        require(r != nullptr, "null argument");
        const auto v = uncert::sample_qubit_state(
            pure ? uncert::SampleMode::PureUniform : uncert::SampleMode::BallUniform, seed);
        r[0] = v.r1;
        r[1] = v.r2;
        r[2] = v.r3;
    });
}

UNCERT_API uncert_status uncert_qubit_variance_pair(const double r[3], const double a[3], const double b[3],
                                                    uncert_pair_report *out) {
    return guard([&] {
        write_report(uncert::qubit_variance_pair(read_bloch(r), read_direction(a), read_direction(b)), out);
    });
}

UNCERT_API uncert_status uncert_qubit_region_contains(double d1, double d2, int *contains) {
    return guard([&] {
        require(contains != nullptr, "null argument");
        *contains = uncert::qubit_region_contains(d1, d2) ? 1 : 0;
    });
}

UNCERT_API uncert_status uncert_qutrit_variance_pair(double omega, const double r[3], const double a[3],
                                                     const double b[3], uncert_pair_report *out) {
    return guard([&] {
        const auto q = uncert::AppendedQutrit::make(omega, read_bloch(r));
        write_report(uncert::qutrit_variance_pair(q, read_direction(a), read_direction(b)), out);
    });
}

UNCERT_API uncert_status uncert_qutrit_boundary_min(double d1, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::qutrit_boundary_min(d1);
    });
}

UNCERT_API uncert_status uncert_subspace_bloch(const uncert_state *rho, int pair, double n[3]) {
    return guard([&] {
        require(rho && n, "null argument");
        const auto v = uncert::subspace_bloch(rho->rho, read_pair(pair));
        n[0] = v.n1;
        n[1] = v.n2;
        n[2] = v.n3;
    });
}

UNCERT_API uncert_status uncert_atomic_uncertainty_sum(const uncert_state *rho, int pair, const double a[3],
                                                       const double b[3], uncert_pair_report *out) {
    return guard([&] {
        require(rho != nullptr, "null argument");
        require((a == nullptr) == (b == nullptr), "frame directions must both be given or both be null");
        if (a == nullptr) {
            write_report(uncert::atomic_uncertainty_sum(rho->rho, read_pair(pair)), out);
        } else {
            write_report(uncert::atomic_uncertainty_sum(rho->rho, read_pair(pair), read_direction(a), read_direction(b)),
                         out);
        }
    });
}

UNCERT_API uncert_status uncert_min_uncertainty_sum(double pop_i, double pop_j, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::min_uncertainty_sum(pop_i, pop_j);
    });
}

UNCERT_API uncert_status uncert_atomic_preset(const char *preset, int pair, double *lo, double *hi) {
    return guard([&] {
        require(preset && lo && hi, "null argument");
        const auto sums = uncert::preset_min_sums(uncert::parse_preset(preset));
        const auto it = sums.find(read_pair(pair));
        if (it == sums.end()) {
            throw uncert::Error(uncert::ErrorCode::InvalidPair, std::string("preset '") + preset +
                                                                    "' does not evaluate pair " + std::to_string(pair));
        }
        *lo = it->second.lo;
        *hi = it->second.hi;
    });
}

UNCERT_API uncert_status uncert_atomic_preset_populations(const char *preset, double pops[3]) {
    return guard([&] {
        require(preset && pops, "null argument");
        const auto p = uncert::preset_populations(uncert::parse_preset(preset));
        std::copy(p.begin(), p.end(), pops);
    });
}

UNCERT_API uncert_status uncert_coupling_unitary(double *entries) {
    return guard([&] { write_matrix(uncert::coupling_unitary(), entries); });
}

UNCERT_API uncert_status uncert_extract_params(const uncert_state *rho_ab, double s[3], double t[9]) {
    return guard([&] {
        require(rho_ab && s && t, "null argument");
        const auto p = uncert::extract_params(rho_ab->rho);
        for (int i = 0; i < 3; ++i) {
            s[i] = p.s(i);
            for (int j = 0; j < 3; ++j) {
                t[3 * i + j] = p.t(i, j);
            }
        }
    });
}

UNCERT_API uncert_status uncert_two_qubit_uncertainty(double omega, const double r[3], uncert_pair_report *out) {
    return guard([&] {
        write_report(uncert::two_qubit_uncertainty(uncert::AppendedQutrit::make(omega, read_bloch(r))), out);
    });
}

UNCERT_API uncert_status uncert_uncertainty_sum_kappa(double omega, double kappa, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::uncertainty_sum_kappa(uncert::KappaOmega::make(omega, kappa));
    });
}

UNCERT_API uncert_status uncert_concurrence(const uncert_state *rho, double *value, double *lambdas) {
    return guard([&] {
        require(rho && value, "null argument");
        const auto c = uncert::concurrence_general(rho->rho);
        *value = c.value;
        if (lambdas != nullptr) {
            std::copy(c.lambdas.begin(), c.lambdas.end(), lambdas);
        }
    });
}

UNCERT_API uncert_status uncert_concurrence_x_state(const uncert_state *rho, double *value) {
    return guard([&] {
        require(rho && value, "null argument");
        *value = uncert::concurrence_x_state(rho->rho);
    });
}

UNCERT_API uncert_status uncert_concurrence_kappa_omega(double omega, double kappa, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::concurrence_kappa_omega(uncert::KappaOmega::make(omega, kappa));
    });
}

UNCERT_API uncert_status uncert_separable_component_sum(double s3, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::separable_component_sum(s3);
    });
}

UNCERT_API uncert_status uncert_separable_uncertainty_sum(size_t n, const double *p, const double *s_hats,
                                                          double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::separable_uncertainty_sum(read_ensemble(n, p, s_hats));
    });
}

UNCERT_API uncert_status uncert_separable_bound_oracle(size_t grid_n, double lo, double hi, double *out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = uncert::separable_bound_oracle(grid_n, lo, hi);
    });
}

UNCERT_API uncert_status uncert_sample_region(uncert_region_system system, size_t n, uint64_t seed,
                                              uncert_points **out) {
    return guard([&] {
        switch (system) {
        case UNCERT_REGION_QUBIT: emplace_out(out, uncert::sample_qubit_region(n, seed)); break;
        case UNCERT_REGION_QUTRIT: emplace_out(out, uncert::sample_qutrit_region(n, seed)); break;
        default: require(false, "unknown region system");
        }
    });
}

UNCERT_API void uncert_points_destroy(uncert_points *points) { delete points; }

UNCERT_API size_t uncert_points_size(const uncert_points *points) {
    return points == nullptr ? 0 : points->points.size();
}

UNCERT_API uncert_status uncert_points_get(const uncert_points *points, size_t index, double *d1, double *d2,
                                           uncert_region_tag *tag) {
    return guard([&] {
        require(points && d1 && d2 && tag, "null argument");
        if (index >= points->points.size()) {
            throw uncert::Error(uncert::ErrorCode::OutOfRange, "point index out of range");
        }
        const auto &p = points->points[index];
        *d1 = p.d1;
        *d2 = p.d2;
        *tag = p.tag == uncert::RegionTag::Boundary ? UNCERT_TAG_BOUNDARY : UNCERT_TAG_INTERIOR;
    });
}

UNCERT_API uncert_status uncert_points_format(const uncert_points *points, uncert_format format, char **out) {
    return guard([&] {
        require(points && out, "null argument");
        *out = dup_string(format == UNCERT_FORMAT_JSON ? uncert::io::region_json(points->points).dump()
                                                       : uncert::io::region_csv(points->points));
    });
}

UNCERT_API uncert_status uncert_contour(uncert_contour_quantity quantity, size_t grid_n, uncert_grid **out) {
    return guard([&] {
        switch (quantity) {
        case UNCERT_CONTOUR_SUM: emplace_out(out, uncert::contour_sum(grid_n)); break;
        case UNCERT_CONTOUR_CONCURRENCE: emplace_out(out, uncert::contour_concurrence(grid_n)); break;
        case UNCERT_CONTOUR_MIN_SUM_SURFACE: emplace_out(out, uncert::min_sum_surface(grid_n)); break;
        default: require(false, "unknown contour quantity");
        }
    });
}

UNCERT_API void uncert_grid_destroy(uncert_grid *grid) { delete grid; }

UNCERT_API void uncert_grid_shape(const uncert_grid *grid, size_t *nx, size_t *ny) {
    if (nx != nullptr) *nx = grid == nullptr ? 0 : grid->grid.x_vals.size();
    if (ny != nullptr) *ny = grid == nullptr ? 0 : grid->grid.y_vals.size();
}

UNCERT_API uncert_status uncert_grid_value(const uncert_grid *grid, size_t iy, size_t ix, double *x, double *y,
                                           double *z) {
    return guard([&] {
        require(grid && x && y && z, "null argument");
        const auto &g = grid->grid;
        if (iy >= g.y_vals.size() || ix >= g.x_vals.size()) {
            throw uncert::Error(uncert::ErrorCode::OutOfRange, "grid index out of range");
        }
        *x = g.x_vals[ix];
        *y = g.y_vals[iy];
        *z = g.at(iy, ix);
    });
}

UNCERT_API uncert_status uncert_grid_format(const uncert_grid *grid, uncert_format format, char **out) {
    return guard([&] {
        require(grid && out, "null argument");
        *out = dup_string(format == UNCERT_FORMAT_JSON ? uncert::io::contour_json(grid->grid).dump()
                                                       : uncert::io::contour_csv(grid->grid));
    });
}

UNCERT_API uncert_status uncert_verify(const char *suite, uint64_t seed, uncert_verify_result **out) {
    return guard([&] {
        require(suite != nullptr, "null argument");
        emplace_out(out, uncert::run_verification(suite, seed));
    });
}

UNCERT_API void uncert_verify_destroy(uncert_verify_result *result) { delete result; }

UNCERT_API size_t uncert_verify_suite_count(const uncert_verify_result *result) {
    return result == nullptr ? 0 : result->suites.size();
}

UNCERT_API const char *uncert_verify_suite_name(const uncert_verify_result *result, size_t suite) {
    if (result == nullptr || suite >= result->suites.size()) return nullptr;
    return result->suites[suite].suite.c_str();
}

UNCERT_API size_t uncert_verify_check_count(const uncert_verify_result *result, size_t suite) {
    if (result == nullptr || suite >= result->suites.size()) return 0;
    return result->suites[suite].checks.size();
}

UNCERT_API uncert_status uncert_verify_check(const uncert_verify_result *result, size_t suite, size_t check,
                                             const char **name, int *passed, const char **detail) {
    return guard([&] {
        require(result && name && passed && detail, "null argument");
        if (suite >= result->suites.size() || check >= result->suites[suite].checks.size()) {
            throw uncert::Error(uncert::ErrorCode::OutOfRange, "verification index out of range");
        }
        const auto &c = result->suites[suite].checks[check];
        *name = c.name.c_str();
        *passed = c.passed ? 1 : 0;
        *detail = c.detail.c_str();
    });
}

UNCERT_API uncert_status uncert_write_file(const char *path, const char *contents, size_t length) {
    return guard([&] {
        require(path && (contents || length == 0), "null argument");
        uncert::io::write_file_atomic(path, std::string_view(contents ? contents : "", length));
    });
}

} // extern "C"
