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

#include <cstdlib>
#include <cstring>

namespace abslocal::kernels {

namespace {

struct Table {
  Isa isa;
  SpectralScoresFn spectral_scores;
  CompDiagObjectiveFn comp_diag_objective;
  Case2PairSumsFn case2_pair_sums;
};

Table select() {
  const char* env = std::getenv("ABSLOCAL_SIMD");
  const bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
  if (!force_scalar && isa_available(Isa::Avx2))
    return {Isa::Avx2, &avx2::spectral_scores, &avx2::comp_diag_objective,
            &avx2::case2_pair_sums};
  return {Isa::Scalar, &scalar::spectral_scores, &scalar::comp_diag_objective,
          &scalar::case2_pair_sums};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() noexcept { return table().isa; }

void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity) {
  table().spectral_scores(in, f, purity);
}

void comp_diag_objective(CompDiagParams p, AnglePairView angles,
                         std::span<double> out) {
  table().comp_diag_objective(p, angles, out);
}

void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out) {
  table().case2_pair_sums(p, s_minus, s_plus, out);
}

}  // namespace abslocal::kernels
