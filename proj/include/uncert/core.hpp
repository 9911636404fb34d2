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

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace uncert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

namespace tol {
inline constexpr double herm = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd = 1e-10;
inline constexpr double unit = 1e-12;
inline constexpr double orthogonal = 1e-10;
} // namespace tol

enum class ErrorCode {
    NotHermitian = 1,
    TraceNotOne,
    NotPSD,
    DimMismatch,
    EmptyObservableList,
    BlochNormExceeded,
    NotUnitVector,
    NotOrthogonal,
    OutOfRange,
    InvalidOmega,
    NotUnitBloch,
    InvalidPair,
    InvalidAxis,
    InvalidPopulations,
    UnknownPreset,
    NotSymmetricState,
    NotXState,
    InvalidEnsemble,
    EigenFailure,
    InvalidArgument,
    Io,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Largest |m_ij - conj(m_ji)|.
double hermiticity_residual(const ComplexMatrix &m);

/// Validated state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
  public:
    /// Throws NotHermitian / TraceNotOne / NotPSD with the measured residual.
    static DensityMatrix make(ComplexMatrix m);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

class Observable {
  public:
    /// Throws NotHermitian.
    static Observable make(ComplexMatrix m);

    const ComplexMatrix &matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }

  private:
    explicit Observable(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

struct UncertaintyReport {
    std::vector<double> means;
    std::vector<double> second_moments;
    std::vector<double> variances;
    double sum_of_variances = 0.0;
};

struct RobertsonTerms {
    double lhs = 0.0; // product of standard deviations
    double rhs = 0.0; // half the modulus of the commutator expectation
};

inline DensityMatrix make_density(ComplexMatrix m) { return DensityMatrix::make(std::move(m)); }

/// Tr(rho A). The imaginary residual of the trace must stay below 1e-12.
double expectation(const DensityMatrix &rho, const Observable &a);

/// <A^2> - <A>^2, with negatives down to -tol::psd clamped to zero.
double variance(const DensityMatrix &rho, const Observable &a);

UncertaintyReport sum_uncertainty(const DensityMatrix &rho, std::span<const Observable> obs);

RobertsonTerms robertson_bound(const DensityMatrix &rho, const Observable &a1, const Observable &a2);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Ascending real spectrum of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_1, sigma_2, sigma_3 for k = 1, 2, 3.
ComplexMatrix axis(int k);
} // namespace pauli

/// Qubit mean spin vector. Norm is validated where a state is built from it.
struct BlochVector {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    Vec3 vec() const { return {r1, r2, r3}; }
    double norm() const { return vec().norm(); }
    static BlochVector from(const Vec3 &v) { return {v.x(), v.y(), v.z()}; }
};

/// Unit direction for a Pauli observable sigma . a.
class PauliDirection {
  public:
    /// Throws NotUnitVector if |a| differs from 1 by more than tol::unit.
    static PauliDirection make(double a1, double a2, double a3);
    static PauliDirection make(const Vec3 &a) { return make(a.x(), a.y(), a.z()); }

    const Vec3 &vec() const noexcept { return a_; }
    double dot(const Vec3 &v) const { return a_.dot(v); }

  private:
    explicit PauliDirection(Vec3 a) : a_(std::move(a)) {}
    Vec3 a_;
};

/// Throws NotOrthogonal unless |a.b| <= tol::orthogonal.
void require_orthogonal(const PauliDirection &a, const PauliDirection &b);

/// Seeded generator with portable uniform variates (raw mt19937_64 bits, no
/// std distributions), so that a seed fixes the output on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform point on the unit sphere.
    Vec3 unit_vector();

  private:
    std::mt19937_64 engine_;
};

enum class SampleMode { PureUniform, BallUniform };

BlochVector sample_qubit_state(SampleMode mode, Rng &rng);
BlochVector sample_qubit_state(SampleMode mode, std::uint64_t seed);

} // namespace uncert
