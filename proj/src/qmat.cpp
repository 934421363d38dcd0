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

#include "abslocal/qmat.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace abslocal {

namespace {

std::string describe(const char* what, double residual) {
  std::ostringstream os;
  os.precision(3);
  os << what << " (residual " << std::scientific << residual << ")";
  return os.str();
}

}  // namespace

StateError::StateError(Kind kind, double residual, const std::string& what)
    : std::runtime_error(what), kind_(kind), residual_(residual) {}

const char* to_string(StateError::Kind kind) noexcept {
  switch (kind) {
    case StateError::Kind::NonFinite: return "NonFinite";
    case StateError::Kind::NotHermitian: return "NotHermitian";
    case StateError::Kind::TraceNotOne: return "TraceNotOne";
    case StateError::Kind::NotPSD: return "NotPSD";
    case StateError::Kind::NotNormalized: return "NotNormalized";
    case StateError::Kind::NotBellDiagonal: return "NotBellDiagonal";
    case StateError::Kind::NotComputationalDiagonal:
      return "NotComputationalDiagonal";
    case StateError::Kind::Domain: return "DomainError";
  }
  return "Unknown";
}

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
Mat2 y() {
  Mat2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Mat2 z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}
Mat2 get(int k) {
  switch (k) {
    case 0: return x();
    case 1: return y();
    default: return z();
  }
}
}  // namespace pauli

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Vec4c bell_state(int k) {
  const double r = std::sqrt(0.5);
  Vec4c v = Vec4c::Zero();
  switch (k) {
    case 0: v << r, 0, 0, r; break;
    case 1: v << r, 0, 0, -r; break;
    case 2: v << 0, r, -r, 0; break;
    default: v << 0, r, r, 0; break;
  }
  return v;
}

Mat4 bell_projector(int k) {
  const Vec4c v = bell_state(k);
  return v * v.adjoint();
}

Mat4 bell_basis() {
  Mat4 b;
  for (int k = 0; k < 4; ++k) b.col(k) = bell_state(k);
  return b;
}

Vec4c singlet() { return bell_state(2); }

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) {
  // Householder tridiagonalization followed by implicit symmetric QR.
  Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

DensityMatrix DensityMatrix::validate(const Mat4& raw) {
  if (!raw.allFinite())
    throw StateError(StateError::Kind::NonFinite, 0.0,
                     "matrix has non-finite entries");

  const double herm = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::kHermitian)
    throw StateError(StateError::Kind::NotHermitian, herm,
                     describe("matrix is not Hermitian", herm));
  Mat4 m = 0.5 * (raw + raw.adjoint());

  const double trace_err = std::abs(m.trace().real() - 1.0);
  if (trace_err > tol::kTrace)
    throw StateError(StateError::Kind::TraceNotOne, trace_err,
                     describe("trace differs from one", trace_err));

  Eigen::SelfAdjointEigenSolver<Mat4> solver(m);
  Eigen::Vector4d ev = solver.eigenvalues();
  if (ev(0) < -tol::kNegativeEigen)
    throw StateError(StateError::Kind::NotPSD, -ev(0),
                     describe("matrix has a negative eigenvalue", -ev(0)));
  if (ev(0) < 0.0) {
    ev = ev.cwiseMax(0.0);
    ev /= ev.sum();
    m = solver.eigenvectors() * ev.cast<Complex>().asDiagonal() *
        solver.eigenvectors().adjoint();
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Mat4::Identity() * 0.25);
}

DensityMatrix DensityMatrix::pure(const Vec4c& psi) {
  const double n = psi.norm();
  if (!(n > 0.0))
    throw StateError(StateError::Kind::NotNormalized, 1.0, "zero vector");
  const Vec4c unit = psi / n;
  return DensityMatrix(unit * unit.adjoint());
}

double BlochForm::max_abs_diff(const BlochForm& other) const {
  return std::max({(u - other.u).cwiseAbs().maxCoeff(),
                   (v - other.v).cwiseAbs().maxCoeff(),
                   (T - other.T).cwiseAbs().maxCoeff()});
}

Spectrum Spectrum::from_values(std::array<double, 4> a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  if (a[3] < -tol::kNegativeEigen)
    throw StateError(StateError::Kind::NotPSD, -a[3],
                     describe("spectrum has a negative entry", -a[3]));
  double sum = 0.0;
  for (double& x : a) {
    x = std::max(x, 0.0);
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw StateError(StateError::Kind::TraceNotOne, std::abs(sum - 1.0),
                     describe("spectrum does not sum to one",
                              std::abs(sum - 1.0)));
  for (double& x : a) x = std::min(x / sum, 1.0);
  return Spectrum(a);
}

PureThreeQubitState PureThreeQubitState::from_amplitudes(const Amplitudes& a) {
  double n2 = 0.0;
  for (const Complex& c : a) n2 += std::norm(c);
  if (std::abs(n2 - 1.0) > tol::kNorm)
    throw StateError(StateError::Kind::NotNormalized, std::abs(n2 - 1.0),
                     describe("amplitudes are not normalized",
                              std::abs(n2 - 1.0)));
  return PureThreeQubitState(a);
}

PureThreeQubitState PureThreeQubitState::normalized(const Amplitudes& a) {
  double n2 = 0.0;
  for (const Complex& c : a) n2 += std::norm(c);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw StateError(StateError::Kind::NotNormalized, 1.0,
                     "amplitudes vanish or are non-finite");
  Amplitudes out = a;
  const double s = 1.0 / std::sqrt(n2);
  for (Complex& c : out) c *= s;
  return PureThreeQubitState(out);
}

Mat3 correlation_matrix(const Mat4& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = (m * kron(pauli::get(i), pauli::get(j))).trace().real();
  return t;
}

BlochForm to_bloch(const Mat4& m) {
  BlochForm b;
  const Mat2 id = pauli::identity();
  for (int i = 0; i < 3; ++i) {
    b.u(i) = (m * kron(pauli::get(i), id)).trace().real();
    b.v(i) = (m * kron(id, pauli::get(i))).trace().real();
  }
  b.T = correlation_matrix(m);
  return b;
}

BlochForm to_bloch(const DensityMatrix& sigma) {
  return to_bloch(sigma.matrix());
}

Mat4 bloch_matrix(const BlochForm& b) {
  const Mat2 id = pauli::identity();
  Mat4 m = kron(id, id);
  for (int i = 0; i < 3; ++i) {
    m += b.u(i) * kron(pauli::get(i), id);
    m += b.v(i) * kron(id, pauli::get(i));
    for (int j = 0; j < 3; ++j)
      m += b.T(i, j) * kron(pauli::get(i), pauli::get(j));
  }
  return 0.25 * m;
}

DensityMatrix from_bloch(const BlochForm& b) {
  if (!b.u.allFinite() || !b.v.allFinite() || !b.T.allFinite())
    throw StateError(StateError::Kind::NonFinite, 0.0,
                     "Bloch parameters are non-finite");
  return DensityMatrix::validate(bloch_matrix(b));
}

Spectrum spectrum(const DensityMatrix& sigma) {
  const auto ev = hermitian_eigenvalues(sigma.matrix());
  return Spectrum::from_values(ev);
}

ReducedStates reduced_states(const PureThreeQubitState& psi) {
  const auto& a = psi.amplitudes();
  // index = 4*A + 2*B + C
  Mat4 ab = Mat4::Zero();
  Mat2 c = Mat2::Zero();
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 2; ++k)
        ab(r, s) += a[2 * r + k] * std::conj(a[2 * s + k]);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 4; ++r)
        c(i, j) += a[2 * r + i] * std::conj(a[2 * r + j]);

  Vec3 bloch;
  for (int k = 0; k < 3; ++k) bloch(k) = (c * pauli::get(k)).trace().real();
  return ReducedStates{DensityMatrix::validate(ab), c, bloch.norm()};
}

}  // namespace abslocal
