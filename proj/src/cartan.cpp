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

#include "abslocal/cartan.hpp"

#include "abslocal/criteria.hpp"
#include "abslocal/optimize.hpp"
#include "abslocal/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace abslocal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Sign of the permutation (i, j, k) of (0, 1, 2); k is implied.
int levi_civita(int i, int j) { return ((j - i + 3) % 3 == 1) ? 1 : -1; }

Mat2 euler_zyz(double a, double b, double c) {
  const Complex i(0.0, 1.0);
  Mat2 rz_a = Mat2::Zero(), rz_c = Mat2::Zero(), ry;
  rz_a(0, 0) = std::exp(-i * (a / 2));
  rz_a(1, 1) = std::exp(i * (a / 2));
  rz_c(0, 0) = std::exp(-i * (c / 2));
  rz_c(1, 1) = std::exp(i * (c / 2));
  ry << std::cos(b / 2), -std::sin(b / 2), std::sin(b / 2), std::cos(b / 2);
  return rz_a * ry * rz_c;
}

// U_d(theta) (V_A (x) V_B) from nine real parameters.
Mat4 cartan_right_unitary(std::span<const double> p) {
  const Mat4 ud = build_ud(CartanAngles{p[0], p[1], p[2]}).matrix();
  return ud * kron(euler_zyz(p[3], p[4], p[5]), euler_zyz(p[6], p[7], p[8]));
}

}  // namespace

CartanAngles CartanAngles::canonical(double t1, double t2, double t3) {
  if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(t3))
    throw StateError(StateError::Kind::Domain, 0.0,
                     "Cartan angles must be finite");
  return CartanAngles{wrap(t1), wrap(t2), wrap(t3)};
}

std::array<double, 3> CartanAngles::bell_phase_params() const {
  return {-theta1 / 2, -theta2 / 2, -theta3 / 2};
}

std::array<double, 4> CartanAngles::bell_phases() const {
  const auto [x, y, z] = bell_phase_params();
  return {x - y + z, -x + y + z, -x - y - z, x + y - z};
}

GlobalUnitary build_ud(const CartanAngles& angles) {
  const auto lambda = angles.bell_phases();
  const Mat4 basis = bell_basis();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::exp(Complex(0.0, -lambda[k]));
  return GlobalUnitary::validate(basis * phases.asDiagonal() * basis.adjoint());
}

Mat4 build_ud_exponential(const CartanAngles& angles) {
  // X(x)X, Y(x)Y and Z(x)Z commute and square to identity, so
  // exp(i t/2 P) = cos(t/2) I + i sin(t/2) P for each factor.
  Mat4 u = Mat4::Identity();
  for (int k = 0; k < 3; ++k) {
    const double half = angles[k] / 2;
    const Mat4 p = kron(pauli::get(k), pauli::get(k));
    u = u * (std::cos(half) * Mat4::Identity() + Complex(0.0, std::sin(half)) * p);
  }
  return u;
}

BlochForm act_bloch(const BlochForm& b, const CartanAngles& angles) {
  std::array<double, 3> c{}, s{};
  for (int k = 0; k < 3; ++k) {
    c[k] = std::cos(angles[k]);
    s[k] = std::sin(angles[k]);
  }
  BlochForm out = b;
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    const double e = levi_civita(i, j);
    out.u(k) = b.u(k) * c[i] * c[j] + b.v(k) * s[i] * s[j] +
               e * (b.T(i, j) * c[i] * s[j] - b.T(j, i) * s[i] * c[j]);
    out.v(k) = b.v(k) * c[i] * c[j] + b.u(k) * s[i] * s[j] +
               e * (b.T(j, i) * c[i] * s[j] - b.T(i, j) * s[i] * c[j]);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      const double e = levi_civita(i, j);
      out.T(i, j) = b.T(i, j) * c[i] * c[j] + b.T(j, i) * s[i] * s[j] -
                    e * (b.u(k) * c[i] * s[j] - b.v(k) * s[i] * c[j]);
    }
  return out;
}

CompDiagEigenvalues eigvals_comp_diag(const Spectrum& s, double x, double y) {
  const double p = 2 * s[0] + s[1] + s[2] - 1;
  const double q = s[1] - s[2];
  const double sm = std::sin(2 * x - 2 * y);
  const double sp = std::sin(2 * x + 2 * y);
  const double c = 2 * s[1] + 2 * s[2] - 1;
  return {(sm * p + sp * q) * (sm * p + sp * q),
          (sm * p - sp * q) * (sm * p - sp * q), c * c};
}

UnitarySearchResult max_M_over_unitaries(const DensityMatrix& sigma,
                                         const UnitarySearchOptions& options) {
  const Mat4& rho = sigma.matrix();
  const std::size_t n = std::max<std::size_t>(options.samples, 1);

  std::vector<double> sampled(n);
  parallel_for(n, [&](std::size_t i) {
    const GlobalUnitary u = haar_random_unitary(derive_seed(options.seed, i));
    sampled[i] = horodecki_M(conjugate(rho, u.matrix()));
  });

  UnitarySearchResult result;
  result.sampled_max = horodecki_M(rho);  // U = identity
  for (double m : sampled) result.sampled_max = std::max(result.sampled_max, m);
  result.refined_max = result.sampled_max;
  if (!options.refine) return result;

  const auto best = opt::top_k(sampled, options.refine_starts);
  std::vector<double> refined(best.size());
  parallel_for(best.size(), [&](std::size_t b) {
    const GlobalUnitary u =
        haar_random_unitary(derive_seed(options.seed, best[b]));
    const Mat4 start = conjugate(rho, u.matrix());
    auto objective = [&](std::span<const double> p) {
      return horodecki_M(conjugate(start, cartan_right_unitary(p)));
    };
    opt::NelderMeadOptions nm;
    nm.max_iterations = 2000;
    nm.f_tolerance = 1e-12;
    nm.initial_step = 0.4;
    const std::vector<std::vector<double>> starts{std::vector<double>(9, 0.0)};
    refined[b] = opt::refine_multistart(objective, starts, nm).value;
  });
  for (double m : refined) result.refined_max = std::max(result.refined_max, m);
  return result;
}

}  // namespace abslocal
