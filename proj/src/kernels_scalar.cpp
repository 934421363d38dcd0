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

#include "abslocal/kernels.hpp"

#include <algorithm>

namespace abslocal::kernels::scalar {

void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity) {
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double a1 = in.a1[i], a2 = in.a2[i], a3 = in.a3[i], a4 = in.a4[i];
    const double x = 2.0 * a1 + 2.0 * a2 - 1.0;
    const double y = 2.0 * a1 + 2.0 * a3 - 1.0;
    f[i] = x * x + y * y;
    purity[i] = a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4;
  }
}

void comp_diag_objective(CompDiagParams p, AnglePairView ang,
                         std::span<double> out) {
  const std::size_t n = ang.size();
  const double t2 = p.t33 * p.t33;
  for (std::size_t i = 0; i < n; ++i) {
    const double c11 = p.u3 * ang.cos2[i] * ang.sin1[i] -
                       p.v3 * ang.sin2[i] * ang.cos1[i];
    const double c22 = p.v3 * ang.cos2[i] * ang.sin1[i] -
                       p.u3 * ang.sin2[i] * ang.cos1[i];
    const double a = c11 * c11, b = c22 * c22;
    out[i] = std::max({t2 + a, t2 + b, a + b});
  }
}

void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out) {
  const std::size_t n = s_minus.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double l = s_minus[i] * p.p;
    const double r = s_plus[i] * p.q;
    const double a = (l + r) * (l + r);
    const double b = (l - r) * (l - r);
    out.ab[i] = a + b;
    out.ac[i] = a + p.c;
    out.bc[i] = b + p.c;
  }
}

}  // namespace abslocal::kernels::scalar
