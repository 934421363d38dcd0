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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abslocal/cartan.hpp"
#include "abslocal/kernels.hpp"
#include "abslocal/sampling.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace abslocal;
namespace k = abslocal::kernels;

namespace {

// Lengths hitting the empty case, the pure tail, and full vectors + tail.
const std::size_t kLengths[] = {0, 1, 3, 4, 5, 8, 17, 1001};

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct Impl {
  const char* name;
  k::SpectralScoresFn spectral;
  k::CompDiagObjectiveFn comp;
  k::Case2PairSumsFn case2;
};

std::vector<Impl> implementations() {
  std::vector<Impl> out{{"dispatch", k::spectral_scores, k::comp_diag_objective,
                         k::case2_pair_sums}};
  if (k::isa_available(k::Isa::Avx2))
    out.push_back({"avx2", k::avx2::spectral_scores, k::avx2::comp_diag_objective,
                   k::avx2::case2_pair_sums});
  return out;
}

}  // namespace

TEST_CASE("dispatch reports a usable ISA") {
  CHECK(k::isa_available(k::Isa::Scalar));
  CHECK(k::isa_available(k::active_isa()));
  const char* env = std::getenv("ABSLOCAL_SIMD");
  if (env && std::strcmp(env, "scalar") == 0)
    CHECK(k::active_isa() == k::Isa::Scalar);
  else if (k::isa_available(k::Isa::Avx2))
    CHECK(k::active_isa() == k::Isa::Avx2);
  MESSAGE("active ISA: " << std::string(k::to_string(k::active_isa())));
}

TEST_CASE("spectral_scores: scalar reference vs vector paths") {
  Rng rng(1);
  for (const Impl& impl : implementations())
    for (std::size_t n : kLengths) {
      std::vector<double> a1(n), a2(n), a3(n), a4(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto s = Spectrum::from_values(random_simplex_point(rng)).values();
        a1[i] = s[0];
        a2[i] = s[1];
        a3[i] = s[2];
        a4[i] = s[3];
      }
      std::vector<double> f0(n), p0(n), f1(n), p1(n);
      k::scalar::spectral_scores({a1, a2, a3, a4}, f0, p0);
      impl.spectral({a1, a2, a3, a4}, f1, p1);
      INFO(impl.name << " n=" << n);
      CHECK(max_diff(f0, f1) <= 1e-15);
      CHECK(max_diff(p0, p1) <= 1e-15);
      for (std::size_t i = 0; i < n; ++i)
        CHECK_NEAR(f0[i], oracle::f_of_spectrum({a1[i], a2[i], a3[i], a4[i]}), 1e-15);
    }
}

TEST_CASE("comp_diag_objective: scalar reference vs vector paths") {
  Rng rng(2);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi), u(-1.0, 1.0);
  for (const Impl& impl : implementations())
    for (std::size_t n : kLengths) {
      std::vector<double> s1(n), c1(n), s2(n), c2(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double t1 = ang(rng), t2 = ang(rng);
        s1[i] = std::sin(t1);
        c1[i] = std::cos(t1);
        s2[i] = std::sin(t2);
        c2[i] = std::cos(t2);
      }
      const k::CompDiagParams p{u(rng), u(rng), u(rng)};
      std::vector<double> r0(n), r1(n);
      k::scalar::comp_diag_objective(p, {s1, c1, s2, c2}, r0);
      impl.comp(p, {s1, c1, s2, c2}, r1);
      INFO(impl.name << " n=" << n);
      CHECK(max_diff(r0, r1) <= 1e-14);
    }
}

TEST_CASE("case2_pair_sums: scalar reference vs vector paths") {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const Impl& impl : implementations())
    for (std::size_t n : kLengths) {
      std::vector<double> sm(n), sp(n);
      for (std::size_t i = 0; i < n; ++i) {
        sm[i] = u(rng);
        sp[i] = u(rng);
      }
      const k::Case2Params p{u(rng), u(rng), std::abs(u(rng))};
      std::vector<double> ab0(n), ac0(n), bc0(n), ab1(n), ac1(n), bc1(n);
      k::scalar::case2_pair_sums(p, sm, sp, {ab0, ac0, bc0});
      impl.case2(p, sm, sp, {ab1, ac1, bc1});
      INFO(impl.name << " n=" << n);
      CHECK(max_diff(ab0, ab1) <= 1e-14);
      CHECK(max_diff(ac0, ac1) <= 1e-14);
      CHECK(max_diff(bc0, bc1) <= 1e-14);
    }
}

TEST_CASE("case2_pair_sums agrees with eigvals_comp_diag") {
  Rng rng(4);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const Spectrum s = Spectrum::from_values(random_simplex_point(rng));
    const double x = ang(rng), y = ang(rng);
    const double p = 2 * s[0] + s[1] + s[2] - 1, q = s[1] - s[2];
    const double c = 2 * s[1] + 2 * s[2] - 1;
    const double sm[] = {std::sin(2 * x - 2 * y)}, sp[] = {std::sin(2 * x + 2 * y)};
    double ab[1], ac[1], bc[1];
    k::case2_pair_sums({p, q, c * c}, sm, sp, {ab, ac, bc});
    const auto e = eigvals_comp_diag(s, x, y);
    CHECK_NEAR(ab[0], e.a + e.b, 1e-14);
    CHECK_NEAR(ac[0], e.a + e.c, 1e-14);
    CHECK_NEAR(bc[0], e.b + e.c, 1e-14);
  }
}
