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

// Bell-CHSH locality and absolute locality tests.
//
// M(sigma) is the sum of the two largest eigenvalues of T^T T; the state is
// CHSH-local iff M <= 1 and its maximal CHSH value is 2 sqrt(M). The state is
// absolutely local (local under every global unitary) iff
//
//   F = (2a1 + 2a2 - 1)^2 + (2a1 + 2a3 - 1)^2 <= 1
//
// on its descending spectrum.

#include "abslocal/cartan.hpp"
#include "abslocal/qmat.hpp"

#include <cmath>

namespace abslocal {

inline constexpr double kDefaultEpsilon = 1e-7;

/// PASS when value <= 1 - eps, FAIL when value >= 1 + eps, BOUNDARY between.
enum class Verdict { Pass, Boundary, Fail };

const char* to_string(Verdict v) noexcept;
Verdict classify(double value, double eps = kDefaultEpsilon) noexcept;

double horodecki_M(const Mat3& T);
double horodecki_M(const Mat4& sigma);
double horodecki_M(const DensityMatrix& sigma);
inline double chsh_max(double M) { return 2.0 * std::sqrt(M); }

/// (2a1+2a2-1)^2 + (2a1+2a3-1)^2. The equivalent 2[(a1-a4)^2 + (a2-a3)^2]
/// is evaluated alongside and must agree to 1e-12.
double f_spectral(const Spectrum& s);
/// 2[(a1-a4)^2 + (a2-a3)^2].
double f_spectral_gap_form(const Spectrum& s);

Verdict is_absolutely_local(const DensityMatrix& sigma,
                            double eps = kDefaultEpsilon);

/// Bell-diagonal test on the diagonal correlations. Requires u = v = 0 and
/// diagonal T (1e-9), otherwise throws NotBellDiagonal.
Verdict bell_diag_criterion(const BlochForm& b, double eps = kDefaultEpsilon);

struct AngleSearchOptions {
  /// Points per axis of the coarse grid over [0, 2pi)^3.
  std::size_t grid = 24;
  /// Grid points refined by simplex ascent.
  std::size_t starts = 5;
  double f_tolerance = 1e-10;
};

struct CompDiagResult {
  Verdict verdict;
  double max_value;
  CartanAngles argmax;
};

/// Computational-diagonal test: maximizes
/// max(t33^2 + c11^2, t33^2 + c22^2, c11^2 + c22^2) over the Cartan angles.
/// Requires only u3, v3, t33 nonzero (1e-9), else NotComputationalDiagonal.
CompDiagResult comp_diag_criterion(const BlochForm& b,
                                   const AngleSearchOptions& options = {},
                                   double eps = kDefaultEpsilon);

enum class SufficientVerdict { SufficientPass, Inconclusive };
const char* to_string(SufficientVerdict v) noexcept;

struct TraceSufficientResult {
  SufficientVerdict verdict;
  double max_trace;
  CartanAngles argmax;
};

/// One-sided test: max over Cartan angles of Tr(T'^T T') <= 1 implies
/// absolute locality. Never reports failure.
TraceSufficientResult trace_sufficient(const DensityMatrix& sigma,
                                       const AngleSearchOptions& options = {});

/// Reduced-state test for pure three-qubit states: sigma_AB is absolutely
/// local iff the C marginal is maximally mixed. PASS iff |c| <= eps.
/// Throws std::logic_error if the spectral test on sigma_AB disagrees.
Verdict corollary_reduced_test(const PureThreeQubitState& psi,
                               double eps = kDefaultEpsilon);

struct LocalityReport {
  double M = 0.0;
  double chsh_max = 0.0;
  double F = 0.0;
  Verdict bell_local = Verdict::Pass;
  Verdict absolutely_local = Verdict::Pass;
  double epsilon = kDefaultEpsilon;
};

LocalityReport locality_report(const DensityMatrix& sigma,
                               double eps = kDefaultEpsilon);

}  // namespace abslocal
