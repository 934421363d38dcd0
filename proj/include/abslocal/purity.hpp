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

// Purity bounds of the absolutely local set.
//
// Purity and Frobenius distance to I/4 are tied by ||rho - I/4||^2 =
// Tr(rho^2) - 1/4. Every state with purity <= 1/2 (distance <= 1/2) is
// absolutely local; no state with purity > 5/8 (distance > sqrt3/(2 sqrt2))
// is.

#include "abslocal/criteria.hpp"
#include "abslocal/qmat.hpp"

#include <cmath>
#include <cstddef>

namespace abslocal {

inline const double kAlBallRadius = 0.5;
inline const double kNonAlShellRadius = std::sqrt(3.0) / (2.0 * std::sqrt(2.0));

double purity(const DensityMatrix& sigma);
double purity(const Spectrum& s);
/// Frobenius distance to I/4, sqrt(purity - 1/4).
double distance_to_maximally_mixed(double purity);

enum class BallZone { InsideAlBall, OutsideNonAlShell, IndeterminateBand };
const char* to_string(BallZone z) noexcept;

struct BallClassification {
  double purity;
  double distance;
  BallZone zone;
};

/// Zones use the radii widened/narrowed by eps/8, which keeps
/// INSIDE => spectral verdict != FAIL and OUTSIDE => verdict != PASS exact
/// under the same eps.
BallClassification classify_ball(const DensityMatrix& sigma,
                                 double eps = kDefaultEpsilon);

struct PurityOptimum {
  double value;
  Spectrum point;
  /// (a1-a4)^2 + (a2-a3)^2 at `point`.
  double constraint;
  /// Best value found by the grid before refinement.
  double grid_value;
  std::size_t grid_points;
};

/// max sum a_i^2 over ordered spectra with (a1-a4)^2 + (a2-a3)^2 <= 1/2.
PurityOptimum max_purity_al(double grid_step = 1e-3);
/// inf sum a_i^2 over ordered spectra with (a1-a4)^2 + (a2-a3)^2 > 1/2,
/// reported at the closure point attaining it.
PurityOptimum min_purity_non_al(double grid_step = 1e-3);

}  // namespace abslocal
