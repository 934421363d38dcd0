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

#include "abslocal/sampling.hpp"

#include <Eigen/QR>

#include <cmath>

namespace abslocal {

namespace {

template <typename Matrix>
Matrix ginibre(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

template <typename Matrix>
Matrix haar_from_ginibre(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int k = 0; k < g.rows(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace

GlobalUnitary GlobalUnitary::validate(const Mat4& m) {
  const double unit_err = (m.adjoint() * m - Mat4::Identity()).cwiseAbs().maxCoeff();
  if (!(unit_err <= 1e-10))
    throw StateError(StateError::Kind::Domain, unit_err,
                     "matrix is not unitary");
  const double det_err = std::abs(std::abs(m.determinant()) - 1.0);
  if (!(det_err <= 1e-10))
    throw StateError(StateError::Kind::Domain, det_err,
                     "unitary determinant has modulus != 1");
  return GlobalUnitary(m);
}

GlobalUnitary haar_random_unitary(Rng& rng) {
  return GlobalUnitary::validate(haar_from_ginibre(ginibre<Mat4>(rng)));
}

GlobalUnitary haar_random_unitary(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(rng);
}

Mat2 haar_random_unitary_2(Rng& rng) {
  return haar_from_ginibre(ginibre<Mat2>(rng));
}

GlobalUnitary random_local_unitary(Rng& rng) {
  const Mat2 a = haar_random_unitary_2(rng);
  const Mat2 b = haar_random_unitary_2(rng);
  return GlobalUnitary::validate(kron(a, b));
}

DensityMatrix random_hs_state(Rng& rng) {
  const Mat4 g = ginibre<Mat4>(rng);
  const Mat4 rho = g * g.adjoint();
  return DensityMatrix::validate(rho / rho.trace().real());
}

std::array<double, 4> random_simplex_point(Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> a{};
  double sum = 0.0;
  for (double& x : a) {
    x = expo(rng);
    sum += x;
  }
  for (double& x : a) x /= sum;
  return a;
}

PureThreeQubitState random_pure_three_qubit(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  PureThreeQubitState::Amplitudes amps;
  for (Complex& c : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    c = Complex(re, im);
  }
  return PureThreeQubitState::normalized(amps);
}

Mat4 conjugate(const Mat4& sigma, const Mat4& u) {
  return u * sigma * u.adjoint();
}

DensityMatrix conjugate(const DensityMatrix& sigma, const GlobalUnitary& u) {
  return DensityMatrix::validate(conjugate(sigma.matrix(), u.matrix()));
}

}  // namespace abslocal
