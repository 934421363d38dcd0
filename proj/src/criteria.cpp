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

#include "abslocal/criteria.hpp"

#include "abslocal/kernels.hpp"
#include "abslocal/optimize.hpp"
#include "abslocal/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace abslocal {

namespace {

constexpr double kSparsityTol = 1e-9;

opt::NelderMeadOptions refine_options(const AngleSearchOptions& o) {
  opt::NelderMeadOptions nm;
  nm.max_iterations = 1000;
  nm.f_tolerance = o.f_tolerance;
  nm.initial_step = 0.1;
  return nm;
}

CartanAngles angles_of(const std::vector<double>& x) {
  return CartanAngles::canonical(x[0], x[1], x[2]);
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Boundary: return "BOUNDARY";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

const char* to_string(SufficientVerdict v) noexcept {
  return v == SufficientVerdict::SufficientPass ? "SUFFICIENT_PASS"
                                                : "INCONCLUSIVE";
}

Verdict classify(double value, double eps) noexcept {
  if (value <= 1.0 - eps) return Verdict::Pass;
  if (value >= 1.0 + eps) return Verdict::Fail;
  return Verdict::Boundary;
}

double horodecki_M(const Mat3& T) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(T.transpose() * T,
                                             Eigen::EigenvaluesOnly);
  const Vec3& ev = solver.eigenvalues();  // ascending
  return std::max(0.0, ev(1)) + std::max(0.0, ev(2));
}

double horodecki_M(const Mat4& sigma) {
  return horodecki_M(correlation_matrix(sigma));
}

double horodecki_M(const DensityMatrix& sigma) {
  return horodecki_M(sigma.matrix());
}

double f_spectral_gap_form(const Spectrum& s) {
  const double d14 = s[0] - s[3];
  const double d23 = s[1] - s[2];
  return 2.0 * (d14 * d14 + d23 * d23);
}

double f_spectral(const Spectrum& s) {
  const double x = 2 * s[0] + 2 * s[1] - 1;
  const double y = 2 * s[0] + 2 * s[2] - 1;
  const double f = x * x + y * y;
  // The two forms coincide on the simplex.
  if (std::abs(f - f_spectral_gap_form(s)) > 1e-12)
    throw std::logic_error("f_spectral: forms disagree beyond 1e-12");
  return f;
}

Verdict is_absolutely_local(const DensityMatrix& sigma, double eps) {
  return classify(f_spectral(spectrum(sigma)), eps);
}

Verdict bell_diag_criterion(const BlochForm& b, double eps) {
  Mat3 off = b.T;
  off.diagonal().setZero();
  const double residual = std::max({b.u.cwiseAbs().maxCoeff(),
                                    b.v.cwiseAbs().maxCoeff(),
                                    off.cwiseAbs().maxCoeff()});
  if (residual > kSparsityTol)
    throw StateError(StateError::Kind::NotBellDiagonal, residual,
                     "state is not Bell-diagonal");
  const double t1 = b.T(0, 0) * b.T(0, 0);
  const double t2 = b.T(1, 1) * b.T(1, 1);
  const double t3 = b.T(2, 2) * b.T(2, 2);
  return classify(std::max({t1 + t2, t1 + t3, t2 + t3}), eps);
}

CompDiagResult comp_diag_criterion(const BlochForm& b,
                                   const AngleSearchOptions& options,
                                   double eps) {
  Mat3 rest = b.T;
  rest(2, 2) = 0.0;
  const double residual =
      std::max({std::abs(b.u(0)), std::abs(b.u(1)), std::abs(b.v(0)),
                std::abs(b.v(1)), rest.cwiseAbs().maxCoeff()});
  if (residual > kSparsityTol)
    throw StateError(StateError::Kind::NotComputationalDiagonal, residual,
                     "state is not diagonal in the computational basis");

  const kernels::CompDiagParams params{b.u(2), b.v(2), b.T(2, 2)};
  const auto grid = opt::torus_grid(3, options.grid);
  const std::size_t n = grid.size();
  std::vector<double> s1(n), c1(n), s2(n), c2(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    s1[i] = std::sin(grid[i][0]);
    c1[i] = std::cos(grid[i][0]);
    s2[i] = std::sin(grid[i][1]);
    c2[i] = std::cos(grid[i][1]);
  }
  kernels::comp_diag_objective(params, {s1, c1, s2, c2}, values);

  auto objective = [&](std::span<const double> x) {
    const double a[] = {std::sin(x[0])}, b1[] = {std::cos(x[0])},
                 a2[] = {std::sin(x[1])}, b2[] = {std::cos(x[1])};
    double out[1];
    kernels::scalar::comp_diag_objective(params, {a, b1, a2, b2}, out);
    return out[0];
  };
  std::vector<std::vector<double>> starts;
  for (std::size_t idx : opt::top_k(values, options.starts))
    starts.push_back(grid[idx]);
  const auto best = opt::refine_multistart(objective, starts,
                                           refine_options(options));
  return CompDiagResult{classify(best.value, eps), best.value,
                        angles_of(best.x)};
}

TraceSufficientResult trace_sufficient(const DensityMatrix& sigma,
                                       const AngleSearchOptions& options) {
  const BlochForm b = to_bloch(sigma);
  auto trace_at = [&](std::span<const double> x) {
    return act_bloch(b, CartanAngles{x[0], x[1], x[2]}).T.squaredNorm();
  };
  const auto grid = opt::torus_grid(3, options.grid);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = trace_at(grid[i]); });

  std::vector<std::vector<double>> starts;
  for (std::size_t idx : opt::top_k(values, options.starts))
    starts.push_back(grid[idx]);
  const auto best =
      opt::refine_multistart(trace_at, starts, refine_options(options));
  const auto verdict = best.value <= 1.0 ? SufficientVerdict::SufficientPass
                                         : SufficientVerdict::Inconclusive;
  return TraceSufficientResult{verdict, best.value, angles_of(best.x)};
}

Verdict corollary_reduced_test(const PureThreeQubitState& psi, double eps) {
  const ReducedStates r = reduced_states(psi);
  const Verdict v = r.c_norm <= eps ? Verdict::Pass : Verdict::Fail;
  // F(sigma_AB) = 1 + c^2, so the spectral test can only say BOUNDARY or
  // agree; an outright contradiction means something upstream is broken.
  const Verdict spectral = is_absolutely_local(r.ab, eps);
  if ((v == Verdict::Pass && spectral == Verdict::Fail) ||
      (v == Verdict::Fail && spectral == Verdict::Pass))
    throw std::logic_error("corollary_reduced_test: spectral test disagrees");
  return v;
}

LocalityReport locality_report(const DensityMatrix& sigma, double eps) {
  LocalityReport r;
  r.M = horodecki_M(sigma);
  r.chsh_max = chsh_max(r.M);
  r.F = f_spectral(spectrum(sigma));
  r.bell_local = classify(r.M, eps);
  r.absolutely_local = classify(r.F, eps);
  r.epsilon = eps;
  return r;
}

}  // namespace abslocal
