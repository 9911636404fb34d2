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

/*
 * C interface to libuncert: variance-based sum uncertainty relations for
 * qubits, qutrits and three-level atoms, the qutrit to symmetric two-qubit
 * correspondence, and two-qubit concurrence.
 *
 * Conventions:
 *  - Every fallible call returns an uncert_status; UNCERT_OK is zero. The
 *    message of the most recent failure on the calling thread is available
 *    from uncert_last_error().
 *  - Complex matrices cross the boundary as row-major arrays of interleaved
 *    (re, im) doubles, 2 * dim * dim values long.
 *  - Handles are opaque and owned by the caller; release each with its
 *    matching *_destroy function. Destroy functions accept NULL.
 *  - Strings returned through char ** must be released with uncert_string_free.
 */
#ifndef UNCERT_UNCERT_H
#define UNCERT_UNCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(UNCERT_BUILDING_LIBRARY)
#define UNCERT_API __attribute__((visibility("default")))
#else
#define UNCERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uncert_status {
    UNCERT_OK = 0,
    UNCERT_E_NOT_HERMITIAN = 1,
    UNCERT_E_TRACE_NOT_ONE = 2,
    UNCERT_E_NOT_PSD = 3,
    UNCERT_E_DIM_MISMATCH = 4,
    UNCERT_E_EMPTY_OBSERVABLE_LIST = 5,
    UNCERT_E_BLOCH_NORM_EXCEEDED = 6,
    UNCERT_E_NOT_UNIT_VECTOR = 7,
    UNCERT_E_NOT_ORTHOGONAL = 8,
    UNCERT_E_OUT_OF_RANGE = 9,
    UNCERT_E_INVALID_OMEGA = 10,
    UNCERT_E_NOT_UNIT_BLOCH = 11,
    UNCERT_E_INVALID_PAIR = 12,
    UNCERT_E_INVALID_AXIS = 13,
    UNCERT_E_INVALID_POPULATIONS = 14,
    UNCERT_E_UNKNOWN_PRESET = 15,
    UNCERT_E_NOT_SYMMETRIC_STATE = 16,
    UNCERT_E_NOT_X_STATE = 17,
    UNCERT_E_INVALID_ENSEMBLE = 18,
    UNCERT_E_EIGEN_FAILURE = 19,
    UNCERT_E_INVALID_ARGUMENT = 20,
    UNCERT_E_IO = 21,
    UNCERT_E_INTERNAL = 99
} uncert_status;

typedef enum uncert_format { UNCERT_FORMAT_CSV = 0, UNCERT_FORMAT_JSON = 1 } uncert_format;

typedef enum uncert_region_system { UNCERT_REGION_QUBIT = 0, UNCERT_REGION_QUTRIT = 1 } uncert_region_system;

typedef enum uncert_contour_quantity {
    UNCERT_CONTOUR_SUM = 0,
    UNCERT_CONTOUR_CONCURRENCE = 1,
    UNCERT_CONTOUR_MIN_SUM_SURFACE = 2
} uncert_contour_quantity;

typedef enum uncert_region_tag { UNCERT_TAG_INTERIOR = 0, UNCERT_TAG_BOUNDARY = 1 } uncert_region_tag;

/* Moments of a pair of observables. */
typedef struct uncert_pair_report {
    double means[2];
    double second_moments[2];
    double variances[2];
    double sum_of_variances;
} uncert_pair_report;

typedef struct uncert_state uncert_state;           /* validated density matrix */
typedef struct uncert_observable uncert_observable; /* Hermitian operator */
typedef struct uncert_points uncert_points;         /* region sample */
typedef struct uncert_grid uncert_grid;             /* contour grid */
typedef struct uncert_verify_result uncert_verify_result;

/* ---- errors and memory ---------------------------------------------------------- */

UNCERT_API const char *uncert_last_error(void);
UNCERT_API const char *uncert_status_name(uncert_status status);
UNCERT_API void uncert_string_free(char *s);
UNCERT_API const char *uncert_version(void);

/* ---- states --------------------------------------------------------------------- */

UNCERT_API uncert_status uncert_state_create(size_t dim, const double *entries, uncert_state **out);
/* (I + r . sigma) / 2 */
UNCERT_API uncert_status uncert_state_from_bloch(const double r[3], uncert_state **out);
/* omega |psi><psi| (+) (1 - omega), |r| = 1 */
UNCERT_API uncert_status uncert_state_appended_qutrit(double omega, const double r[3], uncert_state **out);
/* U^dag rho_qutrit U for the appended qutrit (omega, r) */
UNCERT_API uncert_status uncert_state_two_qubit_from_qutrit(double omega, const double r[3], uncert_state **out);
/* sum_k p_k rho_k x rho_k with rho_k = (I + sigma . s_k) / 2; s_hats holds 3 * n values */
UNCERT_API uncert_status uncert_state_separable(size_t n, const double *p, const double *s_hats,
                                                uncert_state **out);
UNCERT_API void uncert_state_destroy(uncert_state *state);
UNCERT_API size_t uncert_state_dim(const uncert_state *state);
/* Copies 2 * dim * dim doubles into entries. */
UNCERT_API uncert_status uncert_state_entries(const uncert_state *state, double *entries);

/* ---- observables ---------------------------------------------------------------- */

UNCERT_API uncert_status uncert_observable_create(size_t dim, const double *entries, uncert_observable **out);
/* sigma . a on a qubit */
UNCERT_API uncert_status uncert_observable_pauli(const double a[3], uncert_observable **out);
/* (sigma . a) (+) 0 on a qutrit */
UNCERT_API uncert_status uncert_observable_embedded(const double a[3], uncert_observable **out);
/* sigma^(ij)_axis on a qutrit; pair is 12, 13 or 23 */
UNCERT_API uncert_status uncert_observable_sigma_ij(int pair, int axis, uncert_observable **out);
/* which = 1 or 2: the transformed two-qubit observables */
UNCERT_API uncert_status uncert_observable_transformed(int which, uncert_observable **out);
UNCERT_API void uncert_observable_destroy(uncert_observable *obs);
UNCERT_API size_t uncert_observable_dim(const uncert_observable *obs);

/* ---- generic moments ------------------------------------------------------------ */

UNCERT_API uncert_status uncert_expectation(const uncert_state *rho, const uncert_observable *a, double *out);
UNCERT_API uncert_status uncert_variance(const uncert_state *rho, const uncert_observable *a, double *out);
/* variances may be NULL; otherwise it receives n values. */
UNCERT_API uncert_status uncert_sum_uncertainty(const uncert_state *rho, const uncert_observable *const *obs,
                                                size_t n, double *variances, double *sum);
UNCERT_API uncert_status uncert_robertson_bound(const uncert_state *rho, const uncert_observable *a1,
                                                const uncert_observable *a2, double *lhs, double *rhs);
/* Ascending; eigenvalues receives dim values. */
UNCERT_API uncert_status uncert_hermitian_eigenvalues(size_t dim, const double *entries, double *eigenvalues);
UNCERT_API uncert_status uncert_sample_qubit_state(int pure, uint64_t seed, double r[3]);

/* ---- qubit and qutrit ----------------------------------------------------------- */

UNCERT_API uncert_status uncert_qubit_variance_pair(const double r[3], const double a[3], const double b[3],
                                                    uncert_pair_report *out);
UNCERT_API uncert_status uncert_qubit_region_contains(double d1, double d2, int *contains);
UNCERT_API uncert_status uncert_qutrit_variance_pair(double omega, const double r[3], const double a[3],
                                                     const double b[3], uncert_pair_report *out);
UNCERT_API uncert_status uncert_qutrit_boundary_min(double d1, double *out);

/* ---- three-level atoms ---------------------------------------------------------- */

UNCERT_API uncert_status uncert_subspace_bloch(const uncert_state *rho, int pair, double n[3]);
/* a and b may both be NULL to use the natural frame (n_hat, n_hat_perp). */
UNCERT_API uncert_status uncert_atomic_uncertainty_sum(const uncert_state *rho, int pair, const double a[3],
                                                       const double b[3], uncert_pair_report *out);
UNCERT_API uncert_status uncert_min_uncertainty_sum(double pop_i, double pop_j, double *out);
/* preset: "lambda", "vee" or "xi". Point presets report lo == hi. Pairs the
 * preset does not evaluate yield UNCERT_E_INVALID_PAIR. */
UNCERT_API uncert_status uncert_atomic_preset(const char *preset, int pair, double *lo, double *hi);
/* Populations of a point preset (rho_11, rho_22, rho_33). */
UNCERT_API uncert_status uncert_atomic_preset_populations(const char *preset, double pops[3]);

/* ---- symmetric two-qubit map ---------------------------------------------------- */

/* 32 doubles. */
UNCERT_API uncert_status uncert_coupling_unitary(double *entries);
/* s receives 3 values, t 9 values row-major. */
UNCERT_API uncert_status uncert_extract_params(const uncert_state *rho_ab, double s[3], double t[9]);
UNCERT_API uncert_status uncert_two_qubit_uncertainty(double omega, const double r[3], uncert_pair_report *out);
UNCERT_API uncert_status uncert_uncertainty_sum_kappa(double omega, double kappa, double *out);

/* ---- entanglement --------------------------------------------------------------- */

/* lambdas may be NULL; otherwise receives 4 values, descending. */
UNCERT_API uncert_status uncert_concurrence(const uncert_state *rho, double *value, double *lambdas);
UNCERT_API uncert_status uncert_concurrence_x_state(const uncert_state *rho, double *value);
UNCERT_API uncert_status uncert_concurrence_kappa_omega(double omega, double kappa, double *out);
UNCERT_API uncert_status uncert_separable_component_sum(double s3, double *out);
UNCERT_API uncert_status uncert_separable_uncertainty_sum(size_t n, const double *p, const double *s_hats,
                                                          double *out);
UNCERT_API uncert_status uncert_separable_bound_oracle(size_t grid_n, double lo, double hi, double *out);

/* ---- region and contour data ---------------------------------------------------- */

UNCERT_API uncert_status uncert_sample_region(uncert_region_system system, size_t n, uint64_t seed,
                                              uncert_points **out);
UNCERT_API void uncert_points_destroy(uncert_points *points);
UNCERT_API size_t uncert_points_size(const uncert_points *points);
UNCERT_API uncert_status uncert_points_get(const uncert_points *points, size_t index, double *d1, double *d2,
                                           uncert_region_tag *tag);
/* CSV text, or the JSON results payload {"count", "points"}. */
UNCERT_API uncert_status uncert_points_format(const uncert_points *points, uncert_format format, char **out);

UNCERT_API uncert_status uncert_contour(uncert_contour_quantity quantity, size_t grid_n, uncert_grid **out);
UNCERT_API void uncert_grid_destroy(uncert_grid *grid);
UNCERT_API void uncert_grid_shape(const uncert_grid *grid, size_t *nx, size_t *ny);
/* NaN for cells outside the field's domain. */
UNCERT_API uncert_status uncert_grid_value(const uncert_grid *grid, size_t iy, size_t ix, double *x, double *y,
                                           double *z);
/* Long-form CSV, or the JSON results payload. */
UNCERT_API uncert_status uncert_grid_format(const uncert_grid *grid, uncert_format format, char **out);

/* ---- verification and files ----------------------------------------------------- */

/* suite: "all", "core", "regions", "atomic", "map" or "entanglement". */
UNCERT_API uncert_status uncert_verify(const char *suite, uint64_t seed, uncert_verify_result **out);
UNCERT_API void uncert_verify_destroy(uncert_verify_result *result);
UNCERT_API size_t uncert_verify_suite_count(const uncert_verify_result *result);
UNCERT_API const char *uncert_verify_suite_name(const uncert_verify_result *result, size_t suite);
UNCERT_API size_t uncert_verify_check_count(const uncert_verify_result *result, size_t suite);
/* name and detail stay valid for the lifetime of result. */
UNCERT_API uncert_status uncert_verify_check(const uncert_verify_result *result, size_t suite, size_t check,
                                             const char **name, int *passed, const char **detail);

/* Writes contents to path through a temporary file and a rename. */
UNCERT_API uncert_status uncert_write_file(const char *path, const char *contents, size_t length);

#ifdef __cplusplus
}
#endif

#endif /* UNCERT_UNCERT_H */
