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

#include "uncert/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace uncert {

namespace {

std::string residual_message(const char *what, double residual) {
    std::ostringstream os;
    os.precision(17);
    os << what << " (residual " << residual << ")";
    return os.str();
}

void require_square(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw Error(ErrorCode::DimMismatch, "matrix must be square and non-empty");
    }
}

void require_same_dim(Eigen::Index a, Eigen::Index b) {
    if (a != b) {
        throw Error(ErrorCode::DimMismatch, "dimension mismatch: " + std::to_string(a) +
                                                " vs " + std::to_string(b));
    }
}

} // namespace

const char *error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::EmptyObservableList: return "EmptyObservableList";
    case ErrorCode::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidOmega: return "InvalidOmega";
    case ErrorCode::NotUnitBloch: return "NotUnitBloch";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
    case ErrorCode::InvalidPopulations: return "InvalidPopulations";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::NotSymmetricState: return "NotSymmetricState";
    case ErrorCode::NotXState: return "NotXState";
    case ErrorCode::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

double hermiticity_residual(const ComplexMatrix &m) {
    require_square(m);
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::make(ComplexMatrix m) {
    require_square(m);
    const double herm = hermiticity_residual(m);
    if (herm > tol::herm) {
        throw Error(ErrorCode::NotHermitian, residual_message("density matrix is not Hermitian", herm));
    }
    const double tr = std::abs(m.trace() - Complex(1.0, 0.0));
    if (tr > tol::trace) {
        throw Error(ErrorCode::TraceNotOne, residual_message("density matrix trace is not 1", tr));
    }
    const auto spectrum = hermitian_eigenvalues(m);
    if (spectrum.front() < -tol::psd) {
        throw Error(ErrorCode::NotPSD,
                    residual_message("density matrix has a negative eigenvalue", spectrum.front()));
    }
    return DensityMatrix(std::move(m));
}

Observable Observable::make(ComplexMatrix m) {
    require_square(m);
    const double herm = hermiticity_residual(m);
    if (herm > tol::herm) {
        throw Error(ErrorCode::NotHermitian, residual_message("observable is not Hermitian", herm));
    }
    return Observable(std::move(m));
}

double expectation(const DensityMatrix &rho, const Observable &a) {
    require_same_dim(rho.dim(), a.dim());
    const Complex t = (rho.matrix() * a.matrix()).trace();
    if (std::abs(t.imag()) >= 1e-12) {
        throw Error(ErrorCode::NotHermitian,
                    residual_message("expectation has an imaginary part", t.imag()));
    }
    return t.real();
}

namespace {

struct Moments {
    double mean;
    double second;
    double var;
};

Moments moments(const DensityMatrix &rho, const Observable &a) {
    require_same_dim(rho.dim(), a.dim());
    const double mean = expectation(rho, a);
    const double second = (rho.matrix() * a.matrix() * a.matrix()).trace().real();
    double var = second - mean * mean;
    if (var < 0.0 && var >= -tol::psd) {
        var = 0.0;
    }
    return {mean, second, var};
}

} // namespace

double variance(const DensityMatrix &rho, const Observable &a) { return moments(rho, a).var; }

UncertaintyReport sum_uncertainty(const DensityMatrix &rho, std::span<const Observable> obs) {
    if (obs.empty()) {
        throw Error(ErrorCode::EmptyObservableList, "observable list is empty");
    }
    UncertaintyReport report;
    for (const auto &a : obs) {
        const auto m = moments(rho, a);
        report.means.push_back(m.mean);
        report.second_moments.push_back(m.second);
        report.variances.push_back(m.var);
        report.sum_of_variances += m.var;
    }
    return report;
}

RobertsonTerms robertson_bound(const DensityMatrix &rho, const Observable &a1, const Observable &a2) {
    require_same_dim(rho.dim(), a1.dim());
    require_same_dim(rho.dim(), a2.dim());
    const ComplexMatrix comm = a1.matrix() * a2.matrix() - a2.matrix() * a1.matrix();
    const Complex c = (rho.matrix() * comm).trace();
    return {std::sqrt(variance(rho, a1)) * std::sqrt(variance(rho, a2)), 0.5 * std::abs(c)};
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    const double herm = hermiticity_residual(m);
    if (herm > tol::herm) {
        throw Error(ErrorCode::NotHermitian, residual_message("matrix is not Hermitian", herm));
    }
    // Symmetrise so the solver sees exact Hermitian input.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure, "Hermitian eigensolver did not converge");
    }
    const Eigen::VectorXd &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
    return m;
}

ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix axis(int k) {
    switch (k) {
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw Error(ErrorCode::InvalidAxis, "Pauli axis must be 1, 2 or 3");
    }
}

} // namespace pauli

PauliDirection PauliDirection::make(double a1, double a2, double a3) {
    Vec3 a(a1, a2, a3);
    if (!a.allFinite() || std::abs(a.norm() - 1.0) > tol::unit) {
        throw Error(ErrorCode::NotUnitVector,
                    residual_message("direction is not a unit vector", std::abs(a.norm() - 1.0)));
    }
    return PauliDirection(a);
}

void require_orthogonal(const PauliDirection &a, const PauliDirection &b) {
    const double d = a.vec().dot(b.vec());
    if (std::abs(d) > tol::orthogonal) {
        throw Error(ErrorCode::NotOrthogonal, residual_message("directions are not orthogonal", d));
    }
}

double Rng::normal() {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec3 Rng::unit_vector() {
    // Archimedes: z uniform on [-1, 1], azimuth uniform.
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec3 v(rho * std::cos(phi), rho * std::sin(phi), z);
    return v / v.norm();
}

BlochVector sample_qubit_state(SampleMode mode, Rng &rng) {
    const Vec3 dir = rng.unit_vector();
    if (mode == SampleMode::PureUniform) {
        return BlochVector::from(dir);
    }
    const double radius = std::cbrt(rng.uniform());
    return BlochVector::from(radius * dir);
}

BlochVector sample_qubit_state(SampleMode mode, std::uint64_t seed) {
    Rng rng(seed);
    return sample_qubit_state(mode, rng);
}

} // namespace uncert
