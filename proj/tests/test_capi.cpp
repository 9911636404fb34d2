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

// Exercises the shared library strictly through its C interface.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "uncert/uncert.h"

namespace {

std::vector<double> interleave(const std::vector<double> &re) {
    std::vector<double> out;
    for (double v : re) {
        out.push_back(v);
        out.push_back(0.0);
    }
    return out;
}

std::string take(char *s) {
    std::string out(s);
    uncert_string_free(s);
    return out;
}

} // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(uncert_status_name(UNCERT_OK)) == "OK");
    CHECK(std::string(uncert_status_name(UNCERT_E_NOT_PSD)) == "NotPSD");
    CHECK(std::string(uncert_status_name(UNCERT_E_IO)) == "Io");
    CHECK(std::string(uncert_version()) == "1.0.0");
}

TEST_CASE("state creation reports typed errors") {
    uncert_state *s = nullptr;
    const auto good = interleave({1, 0, 0, 0});
    REQUIRE(uncert_state_create(2, good.data(), &s) == UNCERT_OK);
    CHECK(uncert_state_dim(s) == 2);
    double back[8];
    CHECK(uncert_state_entries(s, back) == UNCERT_OK);
    CHECK(back[0] == 1.0);
    uncert_state_destroy(s);

    const auto npsd = interleave({0.6, 0, 0, 0, 0.6, 0, 0, 0, -0.2});
    s = nullptr;
    CHECK(uncert_state_create(3, npsd.data(), &s) == UNCERT_E_NOT_PSD);
    CHECK(s == nullptr);
    CHECK(std::string(uncert_last_error()).find("negative eigenvalue") != std::string::npos);

    const auto tr = interleave({0.6, 0, 0, 0.6});
    CHECK(uncert_state_create(2, tr.data(), &s) == UNCERT_E_TRACE_NOT_ONE);
    CHECK(uncert_state_create(2, nullptr, &s) == UNCERT_E_INVALID_ARGUMENT);
    const double r[3] = {1, 1, 0};
    CHECK(uncert_state_from_bloch(r, &s) == UNCERT_E_BLOCH_NORM_EXCEEDED);
    const double z[3] = {0, 0, 1};
    CHECK(uncert_state_appended_qutrit(1.5, z, &s) == UNCERT_E_INVALID_OMEGA);
    const double half[3] = {0, 0, 0.5};
    CHECK(uncert_state_appended_qutrit(0.5, half, &s) == UNCERT_E_NOT_UNIT_BLOCH);

    // A successful call clears the last error.
    CHECK(uncert_state_from_bloch(z, &s) == UNCERT_OK);
    CHECK(std::string(uncert_last_error()).empty());
    uncert_state_destroy(s);
    uncert_state_destroy(nullptr);
}

TEST_CASE("moments through handles") {
    const double r[3] = {0.3, 0.4, 0.5};
    const double x[3] = {1, 0, 0}, y[3] = {0, 1, 0};
    uncert_state *rho = nullptr;
    uncert_observable *ax = nullptr, *ay = nullptr;
    REQUIRE(uncert_state_from_bloch(r, &rho) == UNCERT_OK);
    REQUIRE(uncert_observable_pauli(x, &ax) == UNCERT_OK);
    REQUIRE(uncert_observable_pauli(y, &ay) == UNCERT_OK);
    CHECK(uncert_observable_dim(ax) == 2);

    double v = 0.0;
    CHECK(uncert_expectation(rho, ax, &v) == UNCERT_OK);
    CHECK(std::abs(v - 0.3) < 1e-15);
    CHECK(uncert_variance(rho, ay, &v) == UNCERT_OK);
    CHECK(std::abs(v - 0.84) < 1e-15);

    const uncert_observable *list[2] = {ax, ay};
    double vars[2], sum = 0.0;
    CHECK(uncert_sum_uncertainty(rho, list, 2, vars, &sum) == UNCERT_OK);
    CHECK(std::abs(sum - 1.75) < 1e-15);
    CHECK(uncert_sum_uncertainty(rho, list, 0, vars, &sum) == UNCERT_E_EMPTY_OBSERVABLE_LIST);

    double lhs = 0.0, rhs = 0.0;
    CHECK(uncert_robertson_bound(rho, ax, ay, &lhs, &rhs) == UNCERT_OK);
    CHECK(lhs >= rhs);
    CHECK(std::abs(rhs - 0.5) < 1e-15);

    uncert_observable *s13 = nullptr;
    REQUIRE(uncert_observable_sigma_ij(13, 2, &s13) == UNCERT_OK);
    CHECK(uncert_expectation(rho, s13, &v) == UNCERT_E_DIM_MISMATCH);
    CHECK(uncert_observable_sigma_ij(21, 1, &s13) == UNCERT_E_INVALID_PAIR);
    CHECK(uncert_observable_sigma_ij(12, 5, &s13) == UNCERT_E_INVALID_AXIS);
    const double bad[3] = {1, 1, 0};
    CHECK(uncert_observable_pauli(bad, &s13) == UNCERT_E_NOT_UNIT_VECTOR);

    uncert_observable_destroy(s13);
    uncert_observable_destroy(ax);
    uncert_observable_destroy(ay);
    uncert_state_destroy(rho);
}

TEST_CASE("qubit and qutrit pair reports") {
    const double r[3] = {1, 0, 0}, x[3] = {1, 0, 0}, y[3] = {0, 1, 0};
    uncert_pair_report rep{};
    CHECK(uncert_qubit_variance_pair(r, x, y, &rep) == UNCERT_OK);
    CHECK(rep.variances[0] == 0.0);
    CHECK(rep.sum_of_variances == 1.0);
    const double skew[3] = {0.6, 0.8, 0};
    CHECK(uncert_qubit_variance_pair(r, x, skew, &rep) == UNCERT_E_NOT_ORTHOGONAL);

    CHECK(uncert_qutrit_variance_pair(0.5, r, x, y, &rep) == UNCERT_OK);
    CHECK(rep.variances[0] == 0.25);
    CHECK(rep.variances[1] == 0.5);

    int inside = -1;
    CHECK(uncert_qubit_region_contains(0.6, 0.8, &inside) == UNCERT_OK);
    CHECK(inside == 1);
    CHECK(uncert_qubit_region_contains(0.5, 0.5, &inside) == UNCERT_OK);
    CHECK(inside == 0);
    CHECK(uncert_qubit_region_contains(2, 0.5, &inside) == UNCERT_E_OUT_OF_RANGE);

    double m = 0.0;
    CHECK(uncert_qutrit_boundary_min(0.5, &m) == UNCERT_OK);
    CHECK(std::abs(m - 0.5 * std::sqrt(0.75)) < 1e-15);

    double sample[3];
    CHECK(uncert_sample_qubit_state(1, 42, sample) == UNCERT_OK);
    CHECK(std::abs(std::sqrt(sample[0] * sample[0] + sample[1] * sample[1] + sample[2] * sample[2]) - 1) < 1e-12);
}

TEST_CASE("atomic entry points") {
    double lo = 0.0, hi = 0.0;
    CHECK(uncert_atomic_preset("lambda", 12, &lo, &hi) == UNCERT_OK);
    CHECK(std::abs(lo - 0.75) < 1e-12);
    CHECK(lo == hi);
    CHECK(uncert_atomic_preset("vee", 23, &lo, &hi) == UNCERT_OK);
    CHECK(std::abs(lo - 0.96) < 1e-12);
    CHECK(uncert_atomic_preset("xi", 12, &lo, &hi) == UNCERT_OK);
    CHECK(std::abs(hi - 8.0 / 9.0) < 1e-12);
    CHECK(uncert_atomic_preset("lambda", 23, &lo, &hi) == UNCERT_E_INVALID_PAIR);
    CHECK(uncert_atomic_preset("delta", 12, &lo, &hi) == UNCERT_E_UNKNOWN_PRESET);

    double pops[3];
    CHECK(uncert_atomic_preset_populations("vee", pops) == UNCERT_OK);
    CHECK(pops[0] == 0.2);
    double v = 0.0;
    CHECK(uncert_min_uncertainty_sum(0.2, 0.4, &v) == UNCERT_OK);
    CHECK(std::abs(v - 0.84) < 1e-15);
    CHECK(uncert_min_uncertainty_sum(0.8, 0.4, &v) == UNCERT_E_INVALID_POPULATIONS);

    const auto d = interleave({0.2, 0, 0, 0, 0.4, 0, 0, 0, 0.4});
    uncert_state *rho = nullptr;
    REQUIRE(uncert_state_create(3, d.data(), &rho) == UNCERT_OK);
    double n[3];
    CHECK(uncert_subspace_bloch(rho, 13, n) == UNCERT_OK);
    CHECK(std::abs(n[2] + 0.2) < 1e-15);
    uncert_pair_report rep{};
    CHECK(uncert_atomic_uncertainty_sum(rho, 13, nullptr, nullptr, &rep) == UNCERT_OK);
    CHECK(std::abs(rep.sum_of_variances - 1.16) < 1e-15);
    const double x[3] = {1, 0, 0};
    CHECK(uncert_atomic_uncertainty_sum(rho, 13, x, nullptr, &rep) == UNCERT_E_INVALID_ARGUMENT);
    uncert_state_destroy(rho);
}

TEST_CASE("symmetric map and concurrence") {
    double u[32];
    CHECK(uncert_coupling_unitary(u) == UNCERT_OK);
    CHECK(u[0] == 1.0);

    const double r[3] = {0, 1, 0};
    uncert_state *ab = nullptr;
    REQUIRE(uncert_state_two_qubit_from_qutrit(0.5, r, &ab) == UNCERT_OK);
    CHECK(uncert_state_dim(ab) == 4);
    double s[3], t[9];
    CHECK(uncert_extract_params(ab, s, t) == UNCERT_OK);
    CHECK(std::abs(t[1] - 0.5) < 1e-12);
    CHECK(std::abs(t[8]) < 1e-12);

    double c = 0.0, lambdas[4], cx = 0.0, ck = 0.0;
    CHECK(uncert_concurrence(ab, &c, lambdas) == UNCERT_OK);
    CHECK(uncert_concurrence(ab, &c, nullptr) == UNCERT_OK);
    CHECK(uncert_concurrence_x_state(ab, &cx) == UNCERT_OK);
    CHECK(uncert_concurrence_kappa_omega(0.5, 1.0, &ck) == UNCERT_OK);
    CHECK(std::abs(c - ck) < 1e-8);
    CHECK(std::abs(cx - ck) < 1e-12);
    CHECK(uncert_concurrence_kappa_omega(0.5, 1.5, &ck) == UNCERT_E_OUT_OF_RANGE);
    uncert_state_destroy(ab);

    uncert_pair_report rep{};
    const double r2[3] = {0.6, 0.8, 0};
    CHECK(uncert_two_qubit_uncertainty(0.5, r2, &rep) == UNCERT_OK);
    CHECK(std::abs(rep.variances[0] - 0.41) < 1e-15);
    double sum = 0.0;
    CHECK(uncert_uncertainty_sum_kappa(0.5, 1.0, &sum) == UNCERT_OK);
    CHECK(sum == 0.75);

    uncert_observable *a1 = nullptr;
    CHECK(uncert_observable_transformed(1, &a1) == UNCERT_OK);
    CHECK(uncert_observable_dim(a1) == 4);
    uncert_observable_destroy(a1);
    CHECK(uncert_observable_transformed(3, &a1) == UNCERT_E_INVALID_ARGUMENT);

    const double x[3] = {1, 0, 0};
    uncert_observable *e = nullptr;
    CHECK(uncert_observable_embedded(x, &e) == UNCERT_OK);
    CHECK(uncert_observable_dim(e) == 3);
    uncert_observable_destroy(e);
}

TEST_CASE("separable ensembles") {
    const double p[2] = {0.5, 0.5};
    const double sh[6] = {1, 0, 0, 0, 0, 1};
    double v = 0.0;
    CHECK(uncert_separable_uncertainty_sum(2, p, sh, &v) == UNCERT_OK);
    CHECK(std::abs(v - 1.375) < 1e-15);
    uncert_state *rho = nullptr;
    REQUIRE(uncert_state_separable(2, p, sh, &rho) == UNCERT_OK);
    double c = 1.0;
    CHECK(uncert_concurrence(rho, &c, nullptr) == UNCERT_OK);
    CHECK(c < 1e-9);
    uncert_state_destroy(rho);
    const double bad_p[2] = {0.5, 0.6};
    CHECK(uncert_separable_uncertainty_sum(2, bad_p, sh, &v) == UNCERT_E_INVALID_ENSEMBLE);
    CHECK(uncert_separable_component_sum(0.5, &v) == UNCERT_OK);
    CHECK(v == 1.109375);
    CHECK(uncert_separable_bound_oracle(101, -1, 1, &v) == UNCERT_OK);
    CHECK(std::abs(v - 0.75) < 1e-9);
}

TEST_CASE("points, grids and formats") {
    uncert_points *pts = nullptr;
    REQUIRE(uncert_sample_region(UNCERT_REGION_QUTRIT, 1, 1, &pts) == UNCERT_OK);
    CHECK(uncert_points_size(pts) == 2);
    double d1 = -1, d2 = -1;
    uncert_region_tag tag = UNCERT_TAG_INTERIOR;
    CHECK(uncert_points_get(pts, 1, &d1, &d2, &tag) == UNCERT_OK);
    CHECK(d1 == 0.0);
    CHECK(tag == UNCERT_TAG_BOUNDARY);
    CHECK(uncert_points_get(pts, 2, &d1, &d2, &tag) == UNCERT_E_OUT_OF_RANGE);
    char *text = nullptr;
    CHECK(uncert_points_format(pts, UNCERT_FORMAT_CSV, &text) == UNCERT_OK);
    const std::string csv = take(text);
    CHECK(csv.rfind("d1,d2,tag\n", 0) == 0);
    CHECK(csv.find("0,0,boundary\n") != std::string::npos);
    uncert_points_destroy(pts);

    uncert_grid *g = nullptr;
    REQUIRE(uncert_contour(UNCERT_CONTOUR_CONCURRENCE, 2, &g) == UNCERT_OK);
    size_t nx = 0, ny = 0;
    uncert_grid_shape(g, &nx, &ny);
    CHECK(nx == 2);
    CHECK(ny == 2);
    double x = 0, y = 0, z = 0;
    CHECK(uncert_grid_value(g, 0, 1, &x, &y, &z) == UNCERT_OK);
    CHECK(x == 1.0);
    CHECK(y == 0.0);
    CHECK(z == 0.0);
    CHECK(uncert_grid_format(g, UNCERT_FORMAT_JSON, &text) == UNCERT_OK);
    CHECK(take(text).find("\"z_name\":\"concurrence\"") != std::string::npos);
    uncert_grid_destroy(g);
    CHECK(uncert_contour(UNCERT_CONTOUR_SUM, 1, &g) == UNCERT_E_INVALID_ARGUMENT);
}

TEST_CASE("verification results") {
    uncert_verify_result *res = nullptr;
    REQUIRE(uncert_verify("map", 3, &res) == UNCERT_OK);
    REQUIRE(uncert_verify_suite_count(res) == 1);
    CHECK(std::string(uncert_verify_suite_name(res, 0)) == "map");
    const size_t n = uncert_verify_check_count(res, 0);
    CHECK(n > 0);
    for (size_t k = 0; k < n; ++k) {
        const char *name = nullptr, *detail = nullptr;
        int passed = 0;
        CHECK(uncert_verify_check(res, 0, k, &name, &passed, &detail) == UNCERT_OK);
        CHECK(passed == 1);
    }
    const char *name = nullptr, *detail = nullptr;
    int passed = 0;
    CHECK(uncert_verify_check(res, 0, n, &name, &passed, &detail) == UNCERT_E_OUT_OF_RANGE);
    CHECK(uncert_verify_suite_name(res, 5) == nullptr);
    uncert_verify_destroy(res);
    CHECK(uncert_verify("bogus", 1, &res) == UNCERT_E_INVALID_ARGUMENT);
}

TEST_CASE("file writing") {
    const std::string path = "capi_write_test.txt";
    const char body[] = "x,y,z\n";
    CHECK(uncert_write_file(path.c_str(), body, std::strlen(body)) == UNCERT_OK);
    std::FILE *f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char buf[16] = {};
    const size_t got = std::fread(buf, 1, sizeof buf - 1, f);
    std::fclose(f);
    CHECK(std::string(buf, got) == body);
    std::remove(path.c_str());
    CHECK(uncert_write_file("no/such/dir/file.txt", body, 3) == UNCERT_E_IO);
}

TEST_CASE("eigenvalues through the C API") {
    const auto m = interleave({3, 0, 0, 0, 1, 0, 0, 0, 2});
    double ev[3];
    CHECK(uncert_hermitian_eigenvalues(3, m.data(), ev) == UNCERT_OK);
    CHECK(ev[0] == doctest::Approx(1.0));
    CHECK(ev[2] == doctest::Approx(3.0));
    const double skew[8] = {1, 0, 1, 0, 0, 0, 1, 0};
    CHECK(uncert_hermitian_eigenvalues(2, skew, ev) == UNCERT_E_NOT_HERMITIAN);
}
