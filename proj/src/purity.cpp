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

#include "abslocal/purity.hpp"

#include "abslocal/kernels.hpp"
#include "abslocal/parallel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace abslocal {

namespace {

using Point = std::array<double, 4>;

// F on the grid is compared against 1 with this slack so that grid points
// lying exactly on the constraint surface are kept despite rounding.
constexpr double kGridSlack = 1e-12;

double constraint_of(const Point& a) {
  const double d14 = a[0] - a[3], d23 = a[1] - a[2];
  return d14 * d14 + d23 * d23;
}

double purity_of(const Point& a) {
  return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
}

enum class Goal { MaxInsideAl, MinOutsideAl };

struct GridBest {
  double value;
  Point point;
  std::size_t count;
};

// Exhaustive scan of the ordered simplex a1 >= a2 >= a3 >= a4 >= 0 on an
// integer lattice of spacing 1/N, vectorized along a3.
GridBest scan_grid(Goal goal, double step) {
  if (!(step > 0.0) || step > 0.25)
    throw std::invalid_argument("grid step must lie in (0, 0.25]");
  const long n = std::lround(1.0 / step);
  const double inv = 1.0 / static_cast<double>(n);
  const bool maximize = goal == Goal::MaxInsideAl;
  const double sentinel = maximize ? -1.0 : 2.0;

  const long first = (n + 3) / 4;
  const std::size_t rows = static_cast<std::size_t>(n - first + 1);
  std::vector<GridBest> per_row(rows, GridBest{sentinel, {}, 0});

  parallel_for(rows, [&](std::size_t r) {
    const long i1 = first + static_cast<long>(r);
    GridBest best{sentinel, {}, 0};
    std::size_t visited = 0;
    std::vector<double> c1, c2, c3, c4, f, p;
    for (long i2 = 0; i2 <= std::min(i1, n - i1); ++i2) {
      const long rest = n - i1 - i2;
      const long lo = (rest + 1) / 2;
      const long hi = std::min(i2, rest);
      if (lo > hi) continue;
      const std::size_t m = static_cast<std::size_t>(hi - lo + 1);
      c1.assign(m, i1 * inv);
      c2.assign(m, i2 * inv);
      c3.resize(m);
      c4.resize(m);
      f.resize(m);
      p.resize(m);
      for (std::size_t k = 0; k < m; ++k) {
        const long i3 = lo + static_cast<long>(k);
        c3[k] = i3 * inv;
        c4[k] = (rest - i3) * inv;
      }
      kernels::spectral_scores({c1, c2, c3, c4}, f, p);
      for (std::size_t k = 0; k < m; ++k) {
        const bool feasible =
            maximize ? f[k] <= 1.0 + kGridSlack : f[k] >= 1.0 - kGridSlack;
        if (!feasible) continue;
        const bool better = maximize ? p[k] > best.value : p[k] < best.value;
        if (better) best = GridBest{p[k], {c1[k], c2[k], c3[k], c4[k]}, 0};
      }
      visited += m;
    }
    best.count = visited;
    per_row[r] = best;
  });

  GridBest out{sentinel, {}, 0};
  for (const GridBest& b : per_row) {
    out.count += b.count;
    const bool better = maximize ? b.value > out.value : b.value < out.value;
    if (better) out = GridBest{b.value, b.point, out.count};
  }
  if (out.value == sentinel)
    throw std::runtime_error("purity grid found no feasible point");
  return out;
}

// Maps a trial point onto the feasible region by scaling along the ray from
// I/4: the constraint scales with t^2 and purity - 1/4 with t^2 as well.
std::optional<Point> project(Goal goal, const Point& trial) {
  Point a = trial;
  for (double x : a)
    if (x < 0.0) return std::nullopt;
  std::sort(a.begin(), a.end(), std::greater<>());
  const double c = constraint_of(a);
  double t = 1.0;
  if (goal == Goal::MaxInsideAl && c > 0.5) t = std::sqrt(0.5 / c);
  if (goal == Goal::MinOutsideAl && c < 0.5) {
    if (!(c > 0.0)) return std::nullopt;
    t = std::sqrt(0.5 / c);
  }
  for (double& x : a) x = 0.25 + t * (x - 0.25);
  if (a[3] < 0.0) return std::nullopt;
  return a;
}

// Compass search on the projected objective; directions keep the sum fixed.
Point refine(Goal goal, Point start, double step) {
  const bool maximize = goal == Goal::MaxInsideAl;
  auto score = [&](const Point& p) -> std::optional<std::pair<double, Point>> {
    auto q = project(goal, p);
    if (!q) return std::nullopt;
    return std::make_pair(purity_of(*q), *q);
  };
  auto current = score(start);
  if (!current) return start;

  std::vector<Point> dirs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        Point d{};
        d[i] = 1.0;
        d[j] = -1.0;
        dirs.push_back(d);
      }

  while (step > 1e-15) {
    bool improved = false;
    for (const Point& d : dirs) {
      Point trial;
      for (int k = 0; k < 4; ++k) trial[k] = current->second[k] + step * d[k];
      auto s = score(trial);
      if (!s) continue;
      const bool better = maximize ? s->first > current->first
                                   : s->first < current->first;
      if (better) {
        current = s;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
  return current->second;
}

PurityOptimum solve(Goal goal, double step) {
  const GridBest grid = scan_grid(goal, step);
  const Point best = refine(goal, grid.point, step);
  return PurityOptimum{purity_of(best), Spectrum::from_values(best),
                       constraint_of(best), grid.value, grid.count};
}

}  // namespace

double purity(const DensityMatrix& sigma) {
  return (sigma.matrix() * sigma.matrix()).trace().real();
}

double purity(const Spectrum& s) { return purity_of(s.values()); }

double distance_to_maximally_mixed(double p) {
  return std::sqrt(std::max(0.0, p - 0.25));
}

const char* to_string(BallZone z) noexcept {
  switch (z) {
    case BallZone::InsideAlBall: return "INSIDE_AL_BALL";
    case BallZone::OutsideNonAlShell: return "OUTSIDE_NONAL_SHELL";
    case BallZone::IndeterminateBand: return "INDETERMINATE_BAND";
  }
  return "?";
}

BallClassification classify_ball(const DensityMatrix& sigma, double eps) {
  const double p = purity(sigma);
  const double d = distance_to_maximally_mixed(p);
  const double margin = eps / 8.0;
  BallZone zone = BallZone::IndeterminateBand;
  if (d <= kAlBallRadius + margin)
    zone = BallZone::InsideAlBall;
  else if (d > kNonAlShellRadius - margin)
    zone = BallZone::OutsideNonAlShell;
  return BallClassification{p, d, zone};
}

PurityOptimum max_purity_al(double grid_step) {
  return solve(Goal::MaxInsideAl, grid_step);
}

PurityOptimum min_purity_non_al(double grid_step) {
  return solve(Goal::MinOutsideAl, grid_step);
}

}  // namespace abslocal
