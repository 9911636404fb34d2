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

#include "uncert/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <unistd.h>

namespace uncert::io {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

const char *tag_name(RegionTag tag) noexcept {
    return tag == RegionTag::Boundary ? "boundary" : "interior";
}

RegionTag parse_tag(std::string_view name) {
    if (name == "boundary") return RegionTag::Boundary;
    if (name == "interior") return RegionTag::Interior;
    throw Error(ErrorCode::InvalidArgument, "unknown region tag '" + std::string(name) + "'");
}

std::string region_csv(std::span<const RegionPoint> points) {
    std::string out = "d1,d2,tag\n";
    for (const auto &p : points) {
        out += format_number(p.d1);
        out += ',';
        out += format_number(p.d2);
        out += ',';
        out += tag_name(p.tag);
        out += '\n';
    }
    return out;
}

Json region_json(std::span<const RegionPoint> points) {
    Json arr = Json::array();
    for (const auto &p : points) {
        arr.push_back(Json{{"d1", p.d1}, {"d2", p.d2}, {"tag", tag_name(p.tag)}});
    }
    return Json{{"count", points.size()}, {"points", std::move(arr)}};
}

std::vector<RegionPoint> region_from_json(const Json &j) {
    std::vector<RegionPoint> out;
    for (const auto &p : j.at("points")) {
        out.push_back({p.at("d1").get<double>(), p.at("d2").get<double>(),
                       parse_tag(p.at("tag").get<std::string>())});
    }
    return out;
}

std::string contour_csv(const ContourGrid &grid) {
    std::string out = "x,y,z\n";
    for (std::size_t iy = 0; iy < grid.y_vals.size(); ++iy) {
        for (std::size_t ix = 0; ix < grid.x_vals.size(); ++ix) {
            out += format_number(grid.x_vals[ix]);
            out += ',';
            out += format_number(grid.y_vals[iy]);
            out += ',';
            out += format_number(grid.at(iy, ix));
            out += '\n';
        }
    }
    return out;
}

Json contour_json(const ContourGrid &grid) {
    Json z = Json::array();
    for (std::size_t iy = 0; iy < grid.y_vals.size(); ++iy) {
        Json row = Json::array();
        for (std::size_t ix = 0; ix < grid.x_vals.size(); ++ix) {
            if (grid.valid(iy, ix)) {
                row.push_back(grid.at(iy, ix));
            } else {
                row.push_back(nullptr);
            }
        }
        z.push_back(std::move(row));
    }
    return Json{{"x_name", grid.x_name}, {"y_name", grid.y_name}, {"z_name", grid.z_name},
                {"x", grid.x_vals},      {"y", grid.y_vals},      {"z", std::move(z)}};
}

ContourGrid contour_from_json(const Json &j) {
    ContourGrid g;
    g.x_name = j.at("x_name").get<std::string>();
    g.y_name = j.at("y_name").get<std::string>();
    g.z_name = j.at("z_name").get<std::string>();
    g.x_vals = j.at("x").get<std::vector<double>>();
    g.y_vals = j.at("y").get<std::vector<double>>();
    const auto &z = j.at("z");
    if (z.size() != g.y_vals.size()) {
        throw Error(ErrorCode::InvalidArgument, "contour z has the wrong number of rows");
    }
    for (const auto &row : z) {
        if (row.size() != g.x_vals.size()) {
            throw Error(ErrorCode::InvalidArgument, "contour z row has the wrong length");
        }
        for (const auto &cell : row) {
            g.z.push_back(cell.is_null() ? ContourGrid::invalid : cell.get<double>());
        }
    }
    return g;
}

Json matrix_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json &j) {
    const auto n = static_cast<Eigen::Index>(j.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto &row = j.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw Error(ErrorCode::DimMismatch, "matrix JSON is not square");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto &c = row.at(static_cast<std::size_t>(k));
            m(i, k) = Complex(c.at(0).get<double>(), c.at(1).get<double>());
        }
    }
    return m;
}

Json report_json(const UncertaintyReport &r) {
    return Json{{"means", r.means},
                {"second_moments", r.second_moments},
                {"variances", r.variances},
                {"sum_of_variances", r.sum_of_variances}};
}

Json envelope(std::string_view command, Json inputs, Json results) {
    return Json{{"schema_version", kSchemaVersion},
                {"command", std::string(command)},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)}};
}

void write_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw Error(ErrorCode::Io, "cannot open '" + tmp.string() + "' for writing");
        }
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        os.flush();
        if (!os) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw Error(ErrorCode::Io, "write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw Error(ErrorCode::Io, "cannot move output into '" + path.string() + "': " + ec.message());
    }
}

} // namespace uncert::io
