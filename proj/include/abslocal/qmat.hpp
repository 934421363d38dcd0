// Copyright 2026 The abslocal Authors
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

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace abslocal {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Tolerances shared by every validity check on states.
namespace tol {
inline constexpr double kHermitian = 1e-8;
inline constexpr double kTrace = 1e-8;
inline constexpr double kNegativeEigen = 1e-10;
inline constexpr double kNorm = 1e-10;
}  // namespace tol

/// Raised whenever an input does not describe what the caller claims it does.
/// Carries the violated invariant and the measured residual.
class StateError : public std::runtime_error {
 public:
  enum class Kind {
    NonFinite,
    NotHermitian,
    TraceNotOne,
    NotPSD,
    NotNormalized,
    NotBellDiagonal,
    NotComputationalDiagonal,
    Domain,
  };

  StateError(Kind kind, double residual, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  double residual() const noexcept { return residual_; }

 private:
  Kind kind_;
  double residual_;
};

const char* to_string(StateError::Kind kind) noexcept;

/// Pauli matrices s1, s2, s3 (X, Y, Z) and the identity.
namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
/// s_k for k in {0, 1, 2}.
Mat2 get(int k);
}  // namespace pauli

Mat4 kron(const Mat2& a, const Mat2& b);

/// Bell states in the computational ordering |00>,|01>,|10>,|11>:
///
///   phi1 = (|00> + |11>)/sqrt2     phi3 = (|01> - |10>)/sqrt2  (singlet)
///   phi2 = (|00> - |11>)/sqrt2     phi4 = (|01> + |10>)/sqrt2
///
/// With this ordering the Bell-basis phases lambda1 = x-y+z, lambda2 =
/// -x+y+z, lambda3 = -x-y-z, lambda4 = x+y-z reproduce the Pauli-exponential
/// form of the nonlocal unitary (see cartan.hpp).
Vec4c bell_state(int k);  // k in {0..3}
Mat4 bell_projector(int k);
/// Columns are phi1..phi4.
Mat4 bell_basis();
Vec4c singlet();

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class DensityMatrix {
 public:
  /// Checks the invariants, symmetrizes the Hermitian part, and clamps
  /// eigenvalues in [-1e-10, 0) to zero. Throws StateError otherwise.
  static DensityMatrix validate(const Mat4& raw);

  static DensityMatrix maximally_mixed();
  static DensityMatrix pure(const Vec4c& psi);

  const Mat4& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// Hilbert-Schmidt parameters: local Bloch vectors and correlation matrix.
struct BlochForm {
  Vec3 u = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Mat3 T = Mat3::Zero();

  /// Largest absolute difference over all 15 parameters.
  double max_abs_diff(const BlochForm& other) const;
};

/// Four eigenvalues sorted descending.
class Spectrum {
 public:
  /// Sorts, clamps tiny negatives, and checks the simplex constraints.
  static Spectrum from_values(std::array<double, 4> values);

  double operator[](std::size_t i) const { return a_[i]; }
  const std::array<double, 4>& values() const noexcept { return a_; }

 private:
  explicit Spectrum(const std::array<double, 4>& a) : a_(a) {}
  std::array<double, 4> a_;
};

/// Normalized state of three qubits A, B, C; A is the most significant bit.
class PureThreeQubitState {
 public:
  using Amplitudes = std::array<Complex, 8>;

  static PureThreeQubitState from_amplitudes(const Amplitudes& amps);
  /// Divides by the norm; throws when the input vanishes.
  static PureThreeQubitState normalized(const Amplitudes& amps);

  const Amplitudes& amplitudes() const noexcept { return amps_; }

 private:
  explicit PureThreeQubitState(const Amplitudes& a) : amps_(a) {}
  Amplitudes amps_;
};

struct ReducedStates {
  DensityMatrix ab;
  Mat2 c;
  /// Length of the Bloch vector of the C marginal.
  double c_norm;
};

BlochForm to_bloch(const DensityMatrix& sigma);
/// Works on any 4x4 matrix; used on conjugated states in hot loops.
BlochForm to_bloch(const Mat4& m);
Mat3 correlation_matrix(const Mat4& m);

/// Builds the operator from its 15 parameters without validating it.
Mat4 bloch_matrix(const BlochForm& b);
/// Reconstructs the state; throws NotPSD when the parameters describe none.
DensityMatrix from_bloch(const BlochForm& b);

/// Ascending eigenvalues of a Hermitian 4x4 matrix.
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);
Spectrum spectrum(const DensityMatrix& sigma);

ReducedStates reduced_states(const PureThreeQubitState& psi);

}  // namespace abslocal
