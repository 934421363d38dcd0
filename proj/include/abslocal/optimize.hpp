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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace abslocal::opt {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  int max_iterations = 400;
  /// Stop once the simplex's objective spread falls below this.
  double f_tolerance = 1e-10;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

/// Downhill simplex maximizing `f` from `start`.
NelderMeadResult nelder_mead_maximize(const Objective& f,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options = {});

/// Regular grid of `per_axis`^dims points over [0, 2pi)^dims, row-major with
/// the last axis fastest.
std::vector<std::vector<double>> torus_grid(std::size_t dims,
                                            std::size_t per_axis);

/// Indices of the k largest values, best first; ties keep index order.
std::vector<std::size_t> top_k(std::span<const double> values, std::size_t k);

struct MultistartResult {
  std::vector<double> x;
  double value = 0.0;
};

/// Refines each start with Nelder-Mead and keeps the best. Restarts from the
/// incumbent until a pass gains less than the tolerance.
MultistartResult refine_multistart(const Objective& f,
                                   std::span<const std::vector<double>> starts,
                                   const NelderMeadOptions& options = {});

}  // namespace abslocal::opt
