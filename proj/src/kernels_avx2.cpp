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

#if defined(__x86_64__) || defined(_M_X64)
#define ABSLOCAL_HAVE_AVX2_TU 1
#pragma GCC target("avx2,fma")
#include <immintrin.h>
#else
#define ABSLOCAL_HAVE_AVX2_TU 0
#endif

namespace abslocal::kernels::avx2 {

#if ABSLOCAL_HAVE_AVX2_TU

namespace {
inline __m256d square(__m256d x) { return _mm256_mul_pd(x, x); }
}  // namespace

void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity) {
  const std::size_t n = in.size();
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a1 = _mm256_loadu_pd(in.a1.data() + i);
    const __m256d a2 = _mm256_loadu_pd(in.a2.data() + i);
    const __m256d a3 = _mm256_loadu_pd(in.a3.data() + i);
    const __m256d a4 = _mm256_loadu_pd(in.a4.data() + i);
    const __m256d two_a1 = _mm256_mul_pd(two, a1);
    const __m256d x = _mm256_sub_pd(_mm256_fmadd_pd(two, a2, two_a1), one);
    const __m256d y = _mm256_sub_pd(_mm256_fmadd_pd(two, a3, two_a1), one);
    _mm256_storeu_pd(f.data() + i, _mm256_fmadd_pd(x, x, square(y)));
    __m256d p = square(a1);
    p = _mm256_fmadd_pd(a2, a2, p);
    p = _mm256_fmadd_pd(a3, a3, p);
    p = _mm256_fmadd_pd(a4, a4, p);
    _mm256_storeu_pd(purity.data() + i, p);
  }
  if (i < n)
    scalar::spectral_scores(
        SpectraView{in.a1.subspan(i), in.a2.subspan(i), in.a3.subspan(i),
                    in.a4.subspan(i)},
        f.subspan(i), purity.subspan(i));
}

void comp_diag_objective(CompDiagParams p, AnglePairView ang,
                         std::span<double> out) {
  const std::size_t n = ang.size();
  const __m256d u3 = _mm256_set1_pd(p.u3);
  const __m256d v3 = _mm256_set1_pd(p.v3);
  const __m256d t2 = _mm256_set1_pd(p.t33 * p.t33);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s1 = _mm256_loadu_pd(ang.sin1.data() + i);
    const __m256d c1 = _mm256_loadu_pd(ang.cos1.data() + i);
    const __m256d s2 = _mm256_loadu_pd(ang.sin2.data() + i);
    const __m256d c2 = _mm256_loadu_pd(ang.cos2.data() + i);
    const __m256d c2s1 = _mm256_mul_pd(c2, s1);
    const __m256d s2c1 = _mm256_mul_pd(s2, c1);
    const __m256d c11 = _mm256_fmsub_pd(u3, c2s1, _mm256_mul_pd(v3, s2c1));
    const __m256d c22 = _mm256_fmsub_pd(v3, c2s1, _mm256_mul_pd(u3, s2c1));
    const __m256d a = square(c11);
    const __m256d b = square(c22);
    const __m256d m = _mm256_max_pd(_mm256_add_pd(t2, _mm256_max_pd(a, b)),
                                    _mm256_add_pd(a, b));
    _mm256_storeu_pd(out.data() + i, m);
  }
  if (i < n)
    scalar::comp_diag_objective(
        p,
        AnglePairView{ang.sin1.subspan(i), ang.cos1.subspan(i),
                      ang.sin2.subspan(i), ang.cos2.subspan(i)},
        out.subspan(i));
}

void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out) {
  const std::size_t n = s_minus.size();
  const __m256d pp = _mm256_set1_pd(p.p);
  const __m256d qq = _mm256_set1_pd(p.q);
  const __m256d cc = _mm256_set1_pd(p.c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_mul_pd(_mm256_loadu_pd(s_minus.data() + i), pp);
    const __m256d r = _mm256_mul_pd(_mm256_loadu_pd(s_plus.data() + i), qq);
    const __m256d a = square(_mm256_add_pd(l, r));
    const __m256d b = square(_mm256_sub_pd(l, r));
    _mm256_storeu_pd(out.ab.data() + i, _mm256_add_pd(a, b));
    _mm256_storeu_pd(out.ac.data() + i, _mm256_add_pd(a, cc));
    _mm256_storeu_pd(out.bc.data() + i, _mm256_add_pd(b, cc));
  }
  if (i < n)
    scalar::case2_pair_sums(
        p, s_minus.subspan(i), s_plus.subspan(i),
        PairSums{out.ab.subspan(i), out.ac.subspan(i), out.bc.subspan(i)});
}

#else

void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity) {
  scalar::spectral_scores(in, f, purity);
}
void comp_diag_objective(CompDiagParams p, AnglePairView ang,
                         std::span<double> out) {
  scalar::comp_diag_objective(p, ang, out);
}
void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out) {
  scalar::case2_pair_sums(p, s_minus, s_plus, out);
}

#endif

}  // namespace abslocal::kernels::avx2
