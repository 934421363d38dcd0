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

// Named state families, their absolute-locality thresholds, and the
// local-filtering predicates they are compared against.

#include "abslocal/criteria.hpp"
#include "abslocal/qmat.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abslocal {

enum class Family {
  Werner,
  Gisin,
  BellDiagonal,
  CompDiagonal,
  RhoF,
  RhoG,
  PureProduct,
};

const char* to_string(Family f) noexcept;
/// Accepts the CLI spellings: werner, gisin, bell_diagonal, comp_diagonal,
/// rho_f, rho_g, pure_product.
std::optional<Family> parse_family(std::string_view name);

struct FamilyPoint {
  Family family;
  std::map<std::string, double> params;
};

/// p |psi-><psi-| + (1-p)/4 I, p in [0, 1].
DensityMatrix werner(double p);

/// sin(theta)|01> + cos(theta)|10>.
Vec4c psi_theta_gisin(double theta);
/// cos(theta)|01> + sin(theta)|10>; the noisy-state family uses this order.
Vec4c psi_theta_noisy(double theta);

/// lambda |psi_theta><psi_theta| + (1-lambda)(|00><00| + |11><11|)/2 with
/// lambda in [0, 1] and theta in (0, pi/2).
DensityMatrix gisin(double lambda, double theta);

/// sum_k a_k |phi_k><phi_k| over the Bell states of qmat.hpp.
DensityMatrix bell_diagonal(const std::array<double, 4>& a);
/// diag(a) in the computational basis.
DensityMatrix comp_diagonal(const std::array<double, 4>& a);

/// q |psi-><psi-| + (1-q)/2 (|00><00| + |01><01|), q in [0, 1].
DensityMatrix rho_f(double q);
/// p |psi_theta><psi_theta| + (1-p)/4 I with psi_theta_noisy, p in [0, 1],
/// theta in [0, pi/2].
DensityMatrix rho_g(double p, double theta);

/// |a> (x) |b> with Bloch angles (polar, azimuth) for each qubit.
DensityMatrix pure_product(double theta_a, double phi_a, double theta_b,
                           double phi_b);

/// Builds any family from named parameters:
///   werner{p}  gisin{lambda, theta}  rho_f{q}  rho_g{p, theta}
///   bell_diagonal / comp_diagonal{a1..a4}
///   pure_product{theta_a, phi_a, theta_b, phi_b} (all default to 0)
DensityMatrix make_state(const FamilyPoint& point);

/// Verdict of "stays CHSH-local under optimal local filtering" for a
/// Bell-diagonal spectrum. Same predicate as the absolute-locality test.
Verdict filter_local_bell_diag(const Spectrum& s, double eps = kDefaultEpsilon);

/// The published no-violation-after-filtering condition for rho_g, evaluated
/// as written: q^2 (1 - cos 4theta) > 2 sqrt(1 + 2q - q^2 - 2 q^2 cos 4theta).
/// q is the mixing weight of rho_g.
bool rho_g_filtering_keeps_local(double q, double theta);

/// rho_f violates CHSH after suitable local filtering for every q > 0.
bool rho_f_filtering_nonlocal(double q);

/// Bisection for the root of F(param) - 1 inside [lo, hi], where F(lo) <= 1 <
/// F(hi). Returns the upper end of the final bracket.
double bisect_threshold(const std::function<double(double)>& f, double lo,
                        double hi, int iterations = 60);

struct SweepOptions {
  std::size_t steps = 101;
  /// Fixed angle for gisin and rho_g.
  double theta = 0.7853981633974483;
  double eps = kDefaultEpsilon;
};

struct SweepRow {
  double param;
  double M;
  double F;
  double purity;
  Verdict bell_local;
  Verdict absolutely_local;
};

struct SweepResult {
  Family family;
  std::string param_name;
  double theta;
  std::vector<SweepRow> rows;
  /// Absolute-locality threshold: F <= 1 below, F > 1 above.
  std::optional<double> threshold;
};

/// Grid over the family's parameter in [0, 1]. F must be nondecreasing from
/// its grid minimum onward, otherwise throws std::runtime_error; the
/// threshold is then bisected inside the first bracket where F crosses 1.
SweepResult sweep_family(Family family, const SweepOptions& options = {});

/// F along a family's sweep parameter (theta fixed where relevant).
std::function<double(double)> family_f(Family family, double theta);

struct AdvantageCounts {
  std::size_t total = 0;
  /// Filtering reveals nonlocality, no global unitary does.
  std::size_t filtering_only = 0;
  /// Some global unitary makes the state nonlocal, filtering does not.
  std::size_t global_only = 0;
  std::size_t both = 0;
  std::size_t neither = 0;
  /// Cells where the absolute-locality test fails.
  std::size_t not_absolutely_local = 0;
  /// Smallest q among those cells.
  std::optional<double> min_q_not_absolutely_local;
};

/// Compares the two nonlocality-enhancing operations on a q x theta grid
/// (q in [0, 1], theta in [0, pi/2], `n` points per axis).
AdvantageCounts advantage_map_rho_f(std::size_t n, double eps = kDefaultEpsilon);
AdvantageCounts advantage_map_rho_g(std::size_t n, double eps = kDefaultEpsilon);

}  // namespace abslocal
