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

#include "abslocal/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace abslocal::opt {

namespace {

using Point = std::vector<double>;

Point affine(const Point& base, const Point& toward, double t) {
  // base + t * (toward - base)
  Point out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead_maximize(const Objective& f, Point start,
                                      const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");

  // Internally minimize g = -f.
  auto g = [&](const Point& x) { return -f(x); };

  std::vector<Point> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = g(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (values[worst] - values[best] < options.f_tolerance) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const Point reflected = affine(centroid, simplex[worst], -1.0);
    const double fr = g(reflected);
    if (fr < values[best]) {
      const Point expanded = affine(centroid, simplex[worst], -2.0);
      const double fe = g(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Point contracted =
        outside ? affine(centroid, reflected, 0.5)
                : affine(centroid, simplex[worst], 0.5);
    const double fc = g(contracted);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      simplex[k] = affine(simplex[best], simplex[k], 0.5);
      values[k] = g(simplex[k]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t b = static_cast<std::size_t>(best_it - values.begin());
  return NelderMeadResult{simplex[b], -values[b], iter};
}

std::vector<std::vector<double>> torus_grid(std::size_t dims,
                                            std::size_t per_axis) {
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= per_axis;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(per_axis);
  std::vector<std::vector<double>> grid(total, std::vector<double>(dims));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t d = dims; d-- > 0;) {
      grid[idx][d] = static_cast<double>(rem % per_axis) * step;
      rem /= per_axis;
    }
  }
  return grid;
}

std::vector<std::size_t> top_k(std::span<const double> values, std::size_t k) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  k = std::min(k, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), [&](std::size_t a, std::size_t b) {
                      return values[a] > values[b] ||
                             (values[a] == values[b] && a < b);
                    });
  idx.resize(k);
  return idx;
}

MultistartResult refine_multistart(const Objective& f,
                                   std::span<const std::vector<double>> starts,
                                   const NelderMeadOptions& options) {
  MultistartResult best;
  bool have = false;
  for (const auto& s : starts) {
    NelderMeadResult r = nelder_mead_maximize(f, s, options);
    // A collapsed simplex can stall short of the optimum; restart until the
    // gain is negligible.
    for (int restart = 0; restart < 20; ++restart) {
      NelderMeadOptions again = options;
      again.initial_step = options.initial_step * 0.1;
      NelderMeadResult next = nelder_mead_maximize(f, r.x, again);
      const double gain = next.value - r.value;
      if (next.value > r.value) r = std::move(next);
      if (gain < options.f_tolerance) break;
    }
    if (!have || r.value > best.value) {
      best = MultistartResult{r.x, r.value};
      have = true;
    }
  }
  return best;
}

}  // namespace abslocal::opt
