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

// Command-line front end. Everything numerical goes through the C API.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uncert/uncert.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct ExitError {
    int code;
    std::string message;
};

[[noreturn]] void usage_error(const std::string &message) { throw ExitError{kExitUsage, message}; }

int exit_code_for(uncert_status status) {
    switch (status) {
    case UNCERT_E_IO: return kExitIo;
    case UNCERT_E_INTERNAL:
    case UNCERT_E_EIGEN_FAILURE: return kExitInvariant;
    default: return kExitUsage;
    }
}

void check(uncert_status status) {
    if (status != UNCERT_OK) {
        throw ExitError{exit_code_for(status),
                        std::string(uncert_status_name(status)) + ": " + uncert_last_error()};
    }
}

template <class T, void (*Destroy)(T *)>
struct Deleter {
    void operator()(T *p) const { Destroy(p); }
};

using StatePtr = std::unique_ptr<uncert_state, Deleter<uncert_state, uncert_state_destroy>>;
using PointsPtr = std::unique_ptr<uncert_points, Deleter<uncert_points, uncert_points_destroy>>;
using GridPtr = std::unique_ptr<uncert_grid, Deleter<uncert_grid, uncert_grid_destroy>>;
using VerifyPtr =
    std::unique_ptr<uncert_verify_result, Deleter<uncert_verify_result, uncert_verify_destroy>>;

/// Copies a library-allocated string and releases it.
std::string take_string(char *s) {
    std::string out(s == nullptr ? "" : s);
    uncert_string_free(s);
    return out;
}

std::vector<double> parse_list(const std::string &text, std::size_t expected, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const char *first = item.data();
        const char *last = first + item.size();
        while (first < last && *first == ' ') ++first;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
            usage_error(std::string("invalid number '") + item + "' in " + what);
        }
        out.push_back(v);
    }
    if (out.size() != expected) {
        usage_error(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
    }
    return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) return *flag;
    const char *env = std::getenv("UNCERT_SEED");
    if (env == nullptr || *env == '\0') return 1;
    std::uint64_t seed = 0;
    const char *last = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, last, seed);
    if (res.ec != std::errc() || res.ptr != last) {
        usage_error(std::string("UNCERT_SEED is not an unsigned integer: '") + env + "'");
    }
    return seed;
}

Json envelope(const std::string &command, Json inputs, Json results) {
    Json j;
    j["schema_version"] = "1.0";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    return j;
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw ExitError{kExitIo, "failed to write to standard output"};
        return;
    }
    check(uncert_write_file(out_path.c_str(), text.data(), text.size()));
}

void emit_json(const Json &j, const std::string &out_path) { emit(j.dump(2) + "\n", out_path); }

Json report_json(const uncert_pair_report &r) {
    Json j;
    j["means"] = {r.means[0], r.means[1]};
    j["second_moments"] = {r.second_moments[0], r.second_moments[1]};
    j["variances"] = {r.variances[0], r.variances[1]};
    j["sum_of_variances"] = r.sum_of_variances;
    return j;
}

Json state_matrix_json(const uncert_state *state) {
    const std::size_t n = uncert_state_dim(state);
    std::vector<double> entries(2 * n * n);
    check(uncert_state_entries(state, entries.data()));
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
            row.push_back({entries[2 * (i * n + k)], entries[2 * (i * n + k) + 1]});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const char *pair_label(int pair) {
    switch (pair) {
    case 12: return "12";
    case 13: return "13";
    default: return "23";
    }
}

// ---------------------------------------------------------------- region

struct RegionArgs {
    std::string system = "qubit";
    long long samples = 1000;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
};

int run_region(const RegionArgs &a) {
    if (a.samples < 1) usage_error("--samples must be at least 1");
    const std::uint64_t seed = resolve_seed(a.seed);
    const auto system = a.system == "qubit" ? UNCERT_REGION_QUBIT : UNCERT_REGION_QUTRIT;
    uncert_points *raw = nullptr;
    check(uncert_sample_region(system, static_cast<std::size_t>(a.samples), seed, &raw));
    PointsPtr points(raw);

    if (a.format == "csv") {
        char *text = nullptr;
        check(uncert_points_format(points.get(), UNCERT_FORMAT_CSV, &text));
        emit(take_string(text), a.out);
        return kExitOk;
    }
    char *text = nullptr;
    check(uncert_points_format(points.get(), UNCERT_FORMAT_JSON, &text));
    Json inputs;
    inputs["system"] = a.system;
    inputs["samples"] = a.samples;
    inputs["seed"] = seed;
    emit_json(envelope("region", std::move(inputs), Json::parse(take_string(text))), a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- atomic

struct AtomicArgs {
    std::string preset;
    std::string pop;
    std::string pair;
    std::string out;
};

int parse_pair_flag(const std::string &text) {
    if (text == "12" || text == "13" || text == "23") return std::stoi(text);
    usage_error("--pair must be 12, 13 or 23");
}

int run_atomic(const AtomicArgs &a) {
    if (a.preset.empty() == a.pop.empty()) usage_error("give exactly one of --preset or --pop");

    std::vector<int> pairs;
    if (!a.pair.empty()) pairs.push_back(parse_pair_flag(a.pair));

    Json inputs;
    Json entries = Json::array();
    if (!a.preset.empty()) {
        inputs["preset"] = a.preset;
        if (pairs.empty()) {
            for (int p : {12, 13, 23}) {
                double lo = 0.0, hi = 0.0;
                if (uncert_atomic_preset(a.preset.c_str(), p, &lo, &hi) == UNCERT_OK) pairs.push_back(p);
            }
        }
        for (int p : pairs) {
            double lo = 0.0, hi = 0.0;
            check(uncert_atomic_preset(a.preset.c_str(), p, &lo, &hi));
            Json e;
            e["pair"] = pair_label(p);
            if (lo == hi) {
                e["min_sum"] = lo;
            } else {
                e["min_sum"] = {lo, hi};
            }
            entries.push_back(std::move(e));
        }
    } else {
        const auto pops = parse_list(a.pop, 3, "--pop");
        double total = 0.0;
        for (double p : pops) {
            if (p < 0.0 || p > 1.0) usage_error("populations must lie in [0, 1]");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-9) usage_error("populations must sum to 1");
        inputs["populations"] = pops;
        if (pairs.empty()) pairs = {12, 13, 23};
        for (int p : pairs) {
            double v = 0.0;
            check(uncert_min_uncertainty_sum(pops[p / 10 - 1], pops[p % 10 - 1], &v));
            Json e;
            e["pair"] = pair_label(p);
            e["min_sum"] = v;
            entries.push_back(std::move(e));
        }
    }
    if (!a.pair.empty()) inputs["pair"] = a.pair;

    Json results;
    results["min_sums"] = std::move(entries);
    emit_json(envelope("atomic", std::move(inputs), std::move(results)), a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- map

struct MapArgs {
    double omega = 0.0;
    std::string r;
    std::string emit = "uncertainty";
    std::string out;
};

int run_map(const MapArgs &a) {
    auto r = parse_list(a.r, 3, "--r");
    const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (std::abs(norm - 1.0) > 1e-9) usage_error("--r must be a unit vector (tolerance 1e-9)");
    for (double &x : r) x /= norm;
    if (!(a.omega >= 0.0 && a.omega <= 1.0)) usage_error("--omega must lie in [0, 1]");

    Json inputs;
    inputs["omega"] = a.omega;
    inputs["r"] = r;
    inputs["emit"] = a.emit;

    Json results;
    if (a.emit == "uncertainty") {
        uncert_pair_report rep{};
        check(uncert_two_qubit_uncertainty(a.omega, r.data(), &rep));
        results = report_json(rep);
    } else {
        uncert_state *raw = nullptr;
        check(uncert_state_two_qubit_from_qutrit(a.omega, r.data(), &raw));
        StatePtr state(raw);
        if (a.emit == "rho_ab") {
            results["rho_ab"] = state_matrix_json(state.get());
        } else if (a.emit == "params") {
            double s[3];
            double t[9];
            check(uncert_extract_params(state.get(), s, t));
            results["s"] = {s[0], s[1], s[2]};
            results["t"] = {{t[0], t[1], t[2]}, {t[3], t[4], t[5]}, {t[6], t[7], t[8]}};
        } else {
            double value = 0.0;
            double lambdas[4];
            check(uncert_concurrence(state.get(), &value, lambdas));
            const double kappa = std::min(1.0, std::hypot(r[0], r[1]));
            double closed = 0.0;
            check(uncert_concurrence_kappa_omega(a.omega, kappa, &closed));
            results["concurrence"] = value;
            results["lambdas"] = {lambdas[0], lambdas[1], lambdas[2], lambdas[3]};
            results["kappa"] = kappa;
            results["closed_form"] = closed;
        }
    }
    emit_json(envelope("map", std::move(inputs), std::move(results)), a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- contour

struct ContourArgs {
    std::string quantity = "sum";
    long long grid = 101;
    std::string out;
    std::string format = "csv";
};

int run_contour(const ContourArgs &a) {
    if (a.grid < 2) usage_error("--grid must be at least 2");
    static const std::map<std::string, uncert_contour_quantity> quantities = {
        {"sum", UNCERT_CONTOUR_SUM},
        {"concurrence", UNCERT_CONTOUR_CONCURRENCE},
        {"min-sum-surface", UNCERT_CONTOUR_MIN_SUM_SURFACE},
    };
    uncert_grid *raw = nullptr;
    check(uncert_contour(quantities.at(a.quantity), static_cast<std::size_t>(a.grid), &raw));
    GridPtr grid(raw);

    char *text = nullptr;
    if (a.format == "csv") {
        check(uncert_grid_format(grid.get(), UNCERT_FORMAT_CSV, &text));
        emit(take_string(text), a.out);
        return kExitOk;
    }
    check(uncert_grid_format(grid.get(), UNCERT_FORMAT_JSON, &text));
    Json inputs;
    inputs["quantity"] = a.quantity;
    inputs["grid"] = a.grid;
    emit_json(envelope("contour", std::move(inputs), Json::parse(take_string(text))), a.out);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::uint64_t> seed;
    bool verbose = false;
};

int run_verify(const VerifyArgs &a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    uncert_verify_result *raw = nullptr;
    check(uncert_verify(a.suite.c_str(), seed, &raw));
    VerifyPtr result(raw);

    std::size_t total_failed = 0;
    std::cout << "seed " << seed << "\n";
    for (std::size_t s = 0; s < uncert_verify_suite_count(result.get()); ++s) {
        std::size_t passed = 0;
        std::size_t failed = 0;
        std::ostringstream lines;
        for (std::size_t c = 0; c < uncert_verify_check_count(result.get(), s); ++c) {
            const char *name = nullptr;
            const char *detail = nullptr;
            int ok = 0;
            check(uncert_verify_check(result.get(), s, c, &name, &ok, &detail));
            ok ? ++passed : ++failed;
            if (!ok || a.verbose) {
                lines << "  " << (ok ? "PASS " : "FAIL ") << name;
                if (*detail != '\0') lines << ": " << detail;
                lines << "\n";
            }
        }
        total_failed += failed;
        std::cout << uncert_verify_suite_name(result.get(), s) << ": " << passed << " passed, " << failed
                  << " failed\n"
                  << lines.str();
    }
    return total_failed == 0 ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variance-based sum uncertainty relations for qubits, qutrits and 3-level atoms"};
    app.set_version_flag("--version", uncert_version());
    app.require_subcommand(1);

    RegionArgs region;
    auto *region_cmd = app.add_subcommand("region", "Sample attainable (d1, d2) standard-deviation pairs");
    region_cmd->add_option("--system", region.system, "qubit or qutrit")
        ->check(CLI::IsMember({"qubit", "qutrit"}))
        ->capture_default_str();
    region_cmd->add_option("--samples", region.samples, "number of sampled states")->capture_default_str();
    region_cmd->add_option("--seed", region.seed, "RNG seed (default: $UNCERT_SEED, else 1)");
    region_cmd->add_option("--out", region.out, "output path (default: standard output)");
    region_cmd->add_option("--format", region.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    AtomicArgs atomic;
    auto *atomic_cmd = app.add_subcommand("atomic", "Minimum uncertainty sum of a 3-level atom");
    auto *preset_opt = atomic_cmd->add_option("--preset", atomic.preset, "lambda, vee or xi")
                           ->check(CLI::IsMember({"lambda", "vee", "xi"}));
    auto *pop_opt = atomic_cmd->add_option("--pop", atomic.pop, "populations p1,p2,p3");
    preset_opt->excludes(pop_opt);
    atomic_cmd->add_option("--pair", atomic.pair, "level pair 12, 13 or 23 (default: all)");
    atomic_cmd->add_option("--out", atomic.out, "output path (default: standard output)");

    MapArgs map;
    auto *map_cmd = app.add_subcommand("map", "Map an appended-level qutrit to a symmetric two-qubit state");
    map_cmd->add_option("--omega", map.omega, "weight of the qubit block in [0, 1]")->required();
    map_cmd->add_option("--r", map.r, "unit Bloch vector r1,r2,r3")->required();
    map_cmd->add_option("--emit", map.emit, "rho_ab, params, uncertainty or concurrence")
        ->check(CLI::IsMember({"rho_ab", "params", "uncertainty", "concurrence"}))
        ->capture_default_str();
    map_cmd->add_option("--out", map.out, "output path (default: standard output)");

    ContourArgs contour;
    auto *contour_cmd = app.add_subcommand("contour", "Tabulate a quantity on a regular grid");
    contour_cmd->add_option("--quantity", contour.quantity, "sum, concurrence or min-sum-surface")
        ->check(CLI::IsMember({"sum", "concurrence", "min-sum-surface"}))
        ->capture_default_str();
    contour_cmd->add_option("--grid", contour.grid, "points per axis")->capture_default_str();
    contour_cmd->add_option("--out", contour.out, "output path (default: standard output)");
    contour_cmd->add_option("--format", contour.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_option("--suite", verify.suite, "all, core, regions, atomic, map or entanglement")
        ->check(CLI::IsMember({"all", "core", "regions", "atomic", "map", "entanglement"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify.seed, "RNG seed (default: $UNCERT_SEED, else 1)");
    verify_cmd->add_flag("--verbose", verify.verbose, "list passing checks too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*region_cmd) return run_region(region);
        if (*atomic_cmd) return run_atomic(atomic);
        if (*map_cmd) return run_map(map);
        if (*contour_cmd) return run_contour(contour);
        if (*verify_cmd) return run_verify(verify);
    } catch (const ExitError &e) {
        std::cerr << "uncert: " << e.message << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "uncert: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
