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

#include "abslocal/zoo.hpp"

#include "abslocal/parallel.hpp"
#include "abslocal/purity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abslocal {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require(bool ok, const std::string& what) {
  if (!ok) throw StateError(StateError::Kind::Domain, 0.0, what);
}

void require_unit(double x, const char* name) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0,
          std::string(name) + " must lie in [0, 1]");
}

void require_weights(const std::array<double, 4>& a) {
  double sum = 0.0;
  for (double x : a) {
    require(std::isfinite(x) && x >= 0.0, "weights must be non-negative");
    sum += x;
  }
  require(std::abs(sum - 1.0) <= 1e-9, "weights must sum to one");
}

Mat4 projector(const Vec4c& v) { return v * v.adjoint(); }

double param(const FamilyPoint& p, const char* name,
             std::optional<double> fallback = std::nullopt) {
  auto it = p.params.find(name);
  if (it != p.params.end()) return it->second;
  if (fallback) return *fallback;
  throw StateError(StateError::Kind::Domain, 0.0,
                   std::string("missing parameter '") + name + "'");
}

std::array<double, 4> weights(const FamilyPoint& p) {
  return {param(p, "a1"), param(p, "a2"), param(p, "a3"), param(p, "a4")};
}

const char* param_name(Family f) {
  switch (f) {
    case Family::Gisin: return "lambda";
    case Family::RhoF: return "q";
    default: return "p";
  }
}

DensityMatrix family_state(Family family, double x, double theta) {
  switch (family) {
    case Family::Werner: return werner(x);
    case Family::Gisin: return gisin(x, theta);
    case Family::RhoF: return rho_f(x);
    case Family::RhoG: return rho_g(x, theta);
    default:
      throw StateError(StateError::Kind::Domain, 0.0,
                       std::string("family '") + to_string(family) +
                           "' has no single sweep parameter");
  }
}

}  // namespace

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::Werner: return "werner";
    case Family::Gisin: return "gisin";
    case Family::BellDiagonal: return "bell_diagonal";
    case Family::CompDiagonal: return "comp_diagonal";
    case Family::RhoF: return "rho_f";
    case Family::RhoG: return "rho_g";
    case Family::PureProduct: return "pure_product";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Werner, Family::Gisin, Family::BellDiagonal,
                   Family::CompDiagonal, Family::RhoF, Family::RhoG,
                   Family::PureProduct})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

DensityMatrix werner(double p) {
  require_unit(p, "werner p");
  return DensityMatrix::validate(p * projector(singlet()) +
                                 (1.0 - p) / 4.0 * Mat4::Identity());
}

Vec4c psi_theta_gisin(double theta) {
  Vec4c v = Vec4c::Zero();
  v(1) = std::sin(theta);
  v(2) = std::cos(theta);
  return v;
}

Vec4c psi_theta_noisy(double theta) {
  Vec4c v = Vec4c::Zero();
  v(1) = std::cos(theta);
  v(2) = std::sin(theta);
  return v;
}

DensityMatrix gisin(double lambda, double theta) {
  require_unit(lambda, "gisin lambda");
  require(std::isfinite(theta) && theta > 0.0 && theta < kHalfPi,
          "gisin theta must lie in (0, pi/2)");
  Mat4 mix = Mat4::Zero();
  mix(0, 0) = 0.5;
  mix(3, 3) = 0.5;
  return DensityMatrix::validate(lambda * projector(psi_theta_gisin(theta)) +
                                 (1.0 - lambda) * mix);
}

DensityMatrix bell_diagonal(const std::array<double, 4>& a) {
  require_weights(a);
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m += a[k] * bell_projector(k);
  return DensityMatrix::validate(m);
}

DensityMatrix comp_diagonal(const std::array<double, 4>& a) {
  require_weights(a);
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m(k, k) = a[k];
  return DensityMatrix::validate(m);
}

DensityMatrix rho_f(double q) {
  require_unit(q, "rho_f q");
  Mat4 m = q * projector(singlet());
  m(0, 0) += (1.0 - q) / 2.0;
  m(1, 1) += (1.0 - q) / 2.0;
  return DensityMatrix::validate(m);
}

DensityMatrix rho_g(double p, double theta) {
  require_unit(p, "rho_g p");
  require(std::isfinite(theta) && theta >= 0.0 && theta <= kHalfPi,
          "rho_g theta must lie in [0, pi/2]");
  return DensityMatrix::validate(p * projector(psi_theta_noisy(theta)) +
                                 (1.0 - p) / 4.0 * Mat4::Identity());
}

DensityMatrix pure_product(double theta_a, double phi_a, double theta_b,
                           double phi_b) {
  auto qubit = [](double t, double ph) {
    Eigen::Vector2cd v;
    v << std::cos(t / 2), std::polar(1.0, ph) * std::sin(t / 2);
    return v;
  };
  const Eigen::Vector2cd a = qubit(theta_a, phi_a), b = qubit(theta_b, phi_b);
  Vec4c psi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) psi(2 * i + j) = a(i) * b(j);
  return DensityMatrix::pure(psi);
}

DensityMatrix make_state(const FamilyPoint& p) {
  switch (p.family) {
    case Family::Werner: return werner(param(p, "p"));
    case Family::Gisin: return gisin(param(p, "lambda"), param(p, "theta"));
    case Family::BellDiagonal: return bell_diagonal(weights(p));
    case Family::CompDiagonal: return comp_diagonal(weights(p));
    case Family::RhoF: return rho_f(param(p, "q"));
    case Family::RhoG: return rho_g(param(p, "p"), param(p, "theta"));
    case Family::PureProduct:
      return pure_product(param(p, "theta_a", 0.0), param(p, "phi_a", 0.0),
                          param(p, "theta_b", 0.0), param(p, "phi_b", 0.0));
  }
  throw StateError(StateError::Kind::Domain, 0.0, "unknown family");
}

Verdict filter_local_bell_diag(const Spectrum& s, double eps) {
  const double x = 2 * s[0] + 2 * s[1] - 1;
  const double y = 2 * s[0] + 2 * s[2] - 1;
  return classify(x * x + y * y, eps);
}

bool rho_g_filtering_keeps_local(double q, double theta) {
  const double c4 = std::cos(4 * theta);
  const double radicand = 1 + 2 * q - q * q - 2 * q * q * c4;
  return q * q * (1 - c4) > 2 * std::sqrt(std::max(0.0, radicand));
}

bool rho_f_filtering_nonlocal(double q) { return q > 0.0; }

double bisect_threshold(const std::function<double(double)>& f, double lo,
                        double hi, int iterations) {
  if (!(f(lo) <= 1.0) || !(f(hi) > 1.0))
    throw std::invalid_argument("bisect_threshold: F - 1 does not change sign");
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

std::function<double(double)> family_f(Family family, double theta) {
  return [family, theta](double x) {
    return f_spectral(spectrum(family_state(family, x, theta)));
  };
}

SweepResult sweep_family(Family family, const SweepOptions& options) {
  if (options.steps < 2)
    throw StateError(StateError::Kind::Domain, 0.0, "sweep needs >= 2 steps");
  SweepResult out{family, param_name(family), options.theta, {}, std::nullopt};
  const std::size_t n = options.steps;
  out.rows.resize(n);
  // Validate once up front so domain errors surface before the parallel loop.
  (void)family_state(family, 0.0, options.theta);
  parallel_for(n, [&](std::size_t i) {
    const double x = static_cast<double>(i) / static_cast<double>(n - 1);
    const DensityMatrix s = family_state(family, x, options.theta);
    SweepRow& row = out.rows[i];
    row.param = x;
    row.M = horodecki_M(s);
    row.F = f_spectral(spectrum(s));
    row.purity = purity(s);
    row.bell_local = classify(row.M, options.eps);
    row.absolutely_local = classify(row.F, options.eps);
  });

  std::size_t argmin = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (out.rows[i].F < out.rows[argmin].F) argmin = i;
  for (std::size_t i = argmin + 1; i < n; ++i)
    if (out.rows[i].F < out.rows[i - 1].F - 1e-12) {
      std::ostringstream os;
      os << "F is not monotone past its minimum for " << to_string(family)
         << " near " << out.param_name << " = " << out.rows[i].param;
      throw std::runtime_error(os.str());
    }

  for (std::size_t i = argmin + 1; i < n; ++i)
    if (out.rows[i].F > 1.0 && out.rows[i - 1].F <= 1.0) {
      out.threshold = bisect_threshold(family_f(family, options.theta),
                                       out.rows[i - 1].param,
                                       out.rows[i].param);
      break;
    }
  return out;
}

namespace {

template <typename Filter, typename State>
AdvantageCounts advantage_map(std::size_t n, double eps, Filter filtering_nonlocal,
                              State make) {
  if (n < 2) throw StateError(StateError::Kind::Domain, 0.0, "map needs n >= 2");
  std::vector<int> cells(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    const double q = static_cast<double>(i) / static_cast<double>(n - 1);
    const double theta = kHalfPi * static_cast<double>(j) / static_cast<double>(n - 1);
    const bool global = is_absolutely_local(make(q, theta), eps) == Verdict::Fail;
    const bool filtering = filtering_nonlocal(q, theta);
    cells[idx] = (global ? 2 : 0) | (filtering ? 1 : 0);
  });

  AdvantageCounts c;
  c.total = n * n;
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const double q = static_cast<double>(idx / n) / static_cast<double>(n - 1);
    switch (cells[idx]) {
      case 0: ++c.neither; break;
      case 1: ++c.filtering_only; break;
      case 2: ++c.global_only; break;
      default: ++c.both; break;
    }
    if (cells[idx] & 2) {
      ++c.not_absolutely_local;
      if (!c.min_q_not_absolutely_local || q < *c.min_q_not_absolutely_local)
        c.min_q_not_absolutely_local = q;
    }
  }
  return c;
}

}  // namespace

AdvantageCounts advantage_map_rho_f(std::size_t n, double eps) {
  return advantage_map(
      n, eps, [](double q, double) { return rho_f_filtering_nonlocal(q); },
      [](double q, double) { return rho_f(q); });
}

AdvantageCounts advantage_map_rho_g(std::size_t n, double eps) {
  return advantage_map(
      n, eps,
      [](double q, double theta) { return !rho_g_filtering_keeps_local(q, theta); },
      [](double q, double theta) { return rho_g(q, theta); });
}

}  // namespace abslocal
