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

#include "abslocal/criteria.hpp"
#include "abslocal/sampling.hpp"
#include "abslocal/zoo.hpp"
#include "test_support.hpp"

#include <numbers>

using namespace abslocal;

TEST_CASE("classify thresholds") {
  CHECK(classify(0.5) == Verdict::Pass);
  CHECK(classify(1.0) == Verdict::Boundary);
  CHECK(classify(1.0 + 5e-8) == Verdict::Boundary);
  CHECK(classify(1.0 + 2e-7) == Verdict::Fail);
  CHECK(classify(1.0 - 2e-7) == Verdict::Pass);
  CHECK(classify(1.05, 0.1) == Verdict::Boundary);
}

TEST_CASE("horodecki_M examples") {
  for (double p : {0.0, 0.2, 0.5, 0.8, 1.0})
    CHECK_NEAR(horodecki_M(werner(p)), 2 * p * p, 1e-14);
  const DensityMatrix s = DensityMatrix::pure(singlet());
  CHECK_NEAR(horodecki_M(s), 2.0, 1e-14);
  CHECK_NEAR(chsh_max(horodecki_M(s)), 2 * std::numbers::sqrt2, 1e-14);
  CHECK_NEAR(horodecki_M(DensityMatrix::maximally_mixed()), 0.0, 1e-15);
}

TEST_CASE("horodecki_M agrees with the Jacobi oracle") {
  Rng rng(3);
  for (int n = 0; n < 300; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const oracle::Bloch b = oracle::bloch(testing::to_array(s));
    CHECK_NEAR(horodecki_M(s), oracle::horodecki_M(b.T), 1e-12);
  }
}

TEST_CASE("horodecki_M is invariant under local unitaries") {
  Rng rng(4);
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const DensityMatrix t = conjugate(s, random_local_unitary(rng));
    CHECK_NEAR(horodecki_M(s), horodecki_M(t), 1e-12);
  }
}

TEST_CASE("f_spectral examples") {
  CHECK_NEAR(f_spectral(Spectrum::from_values({0.25, 0.25, 0.25, 0.25})), 0.0, 1e-15);
  CHECK_NEAR(f_spectral(Spectrum::from_values({1, 0, 0, 0})), 2.0, 1e-15);
  const double half = f_spectral(Spectrum::from_values({0.5, 0.5, 0, 0}));
  CHECK_NEAR(half, 1.0, 1e-15);
  CHECK(classify(half) == Verdict::Boundary);
}

TEST_CASE("f_spectral forms agree and match the oracle") {
  Rng rng(9);
  for (int n = 0; n < 1000; ++n) {
    const Spectrum s = Spectrum::from_values(random_simplex_point(rng));
    CHECK_NEAR(f_spectral(s), f_spectral_gap_form(s), 1e-13);
    CHECK_NEAR(f_spectral(s), oracle::f_of_spectrum(s.values()), 1e-15);
  }
}

TEST_CASE("is_absolutely_local examples") {
  CHECK(is_absolutely_local(werner(0.5)) == Verdict::Pass);
  CHECK_NEAR(f_spectral(spectrum(werner(0.5))), 0.5, 1e-14);
  CHECK(is_absolutely_local(werner(0.8)) == Verdict::Fail);
  CHECK_NEAR(f_spectral(spectrum(werner(0.8))), 1.28, 1e-14);
  for (double theta : {0.2, 0.7854, 1.3})
    CHECK(is_absolutely_local(gisin(1 / std::numbers::sqrt2, theta)) ==
          Verdict::Boundary);
}

TEST_CASE("the spectral test bounds M and is attained by a Bell-diagonal state") {
  Rng rng(21);
  for (int n = 0; n < 500; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const Spectrum sp = spectrum(s);
    CHECK(horodecki_M(s) <= f_spectral(sp) + 1e-12);
    CHECK_NEAR(horodecki_M(bell_diagonal(sp.values())), f_spectral(sp), 1e-10);
  }
}

TEST_CASE("bell_diag_criterion examples") {
  BlochForm b;
  b.T = -0.5 * Mat3::Identity();
  CHECK(bell_diag_criterion(b) == Verdict::Pass);
  b.T = -Mat3::Identity();
  CHECK(bell_diag_criterion(b) == Verdict::Fail);
  CHECK(bell_diag_criterion(BlochForm{}) == Verdict::Pass);

  BlochForm off;
  off.T(0, 1) = 0.1;
  CHECK_THROWS_AS((void)bell_diag_criterion(off), StateError);
  BlochForm local;
  local.u(2) = 0.1;
  try {
    (void)bell_diag_criterion(local);
    FAIL("accepted");
  } catch (const StateError& e) {
    CHECK(e.kind() == StateError::Kind::NotBellDiagonal);
  }
}

TEST_CASE("bell_diag_criterion agrees with the spectral test") {
  Rng rng(8);
  for (int n = 0; n < 500; ++n) {
    const DensityMatrix s = bell_diagonal(random_simplex_point(rng));
    CHECK(bell_diag_criterion(to_bloch(s)) == is_absolutely_local(s));
  }
}

TEST_CASE("comp_diag_criterion examples") {
  const CompDiagResult smix =
      comp_diag_criterion(to_bloch(comp_diagonal({0.5, 0, 0, 0.5})));
  CHECK(smix.verdict == Verdict::Boundary);
  CHECK_NEAR(smix.max_value, 1.0, 1e-9);

  const CompDiagResult pure =
      comp_diag_criterion(to_bloch(comp_diagonal({1, 0, 0, 0})));
  CHECK(pure.verdict == Verdict::Fail);
  CHECK_NEAR(pure.max_value, 2.0, 1e-9);

  const CompDiagResult mix =
      comp_diag_criterion(to_bloch(DensityMatrix::maximally_mixed()));
  CHECK(mix.verdict == Verdict::Pass);
  CHECK_NEAR(mix.max_value, 0.0, 1e-12);

  BlochForm notdiag;
  notdiag.u(0) = 0.2;
  CHECK_THROWS_AS((void)comp_diag_criterion(notdiag), StateError);
}

TEST_CASE("comp_diag_criterion maximum equals the spectral test") {
  Rng rng(12);
  for (int n = 0; n < 100; ++n) {
    // Random order on the diagonal: the maximum must not depend on it.
    const DensityMatrix s = comp_diagonal(random_simplex_point(rng));
    const CompDiagResult r = comp_diag_criterion(to_bloch(s));
    CHECK_NEAR(r.max_value, f_spectral(spectrum(s)), 1e-6);
  }
}

TEST_CASE("comp_diag argmax reproduces its value by direct conjugation") {
  const DensityMatrix s = comp_diagonal({0.5, 0.3, 0.15, 0.05});
  const CompDiagResult r = comp_diag_criterion(to_bloch(s));
  const DensityMatrix t = conjugate(s, build_ud(r.argmax));
  CHECK_NEAR(horodecki_M(t), r.max_value, 1e-9);
}

TEST_CASE("trace_sufficient examples") {
  const auto mix = trace_sufficient(DensityMatrix::maximally_mixed());
  CHECK(mix.verdict == SufficientVerdict::SufficientPass);
  CHECK_NEAR(mix.max_trace, 0.0, 1e-14);

  const auto w = trace_sufficient(werner(0.5));
  CHECK(w.verdict == SufficientVerdict::SufficientPass);
  CHECK_NEAR(w.max_trace, 0.75, 1e-12);

  const auto s = trace_sufficient(DensityMatrix::pure(singlet()));
  CHECK(s.verdict == SufficientVerdict::Inconclusive);
  CHECK_NEAR(s.max_trace, 3.0, 1e-12);
}

TEST_CASE("trace_sufficient pass implies the spectral test passes") {
  Rng rng(17);
  AngleSearchOptions fast;
  fast.grid = 8;
  int passes = 0;
  for (int n = 0; n < 60; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const auto r = trace_sufficient(s, fast);
    CHECK(r.max_trace >= horodecki_M(s) - 1e-12);
    if (r.verdict == SufficientVerdict::SufficientPass) {
      ++passes;
      CHECK(is_absolutely_local(s) != Verdict::Fail);
    }
  }
  CHECK(passes > 0);
}

TEST_CASE("reduced-state test on GHZ, W and product states") {
  const double r = 1 / std::sqrt(2.0);
  PureThreeQubitState::Amplitudes ghz{};
  ghz[0] = ghz[7] = r;
  const auto g = PureThreeQubitState::from_amplitudes(ghz);
  CHECK(corollary_reduced_test(g) == Verdict::Pass);
  CHECK(is_absolutely_local(reduced_states(g).ab) == Verdict::Boundary);

  const double t = 1 / std::sqrt(3.0);
  PureThreeQubitState::Amplitudes w{};
  w[1] = w[2] = w[4] = t;
  const auto ws = PureThreeQubitState::from_amplitudes(w);
  CHECK(corollary_reduced_test(ws) == Verdict::Fail);
  CHECK_NEAR(f_spectral(spectrum(reduced_states(ws).ab)), 1 + 1.0 / 9.0, 1e-12);

  PureThreeQubitState::Amplitudes zero{};
  zero[0] = 1;
  const auto z = PureThreeQubitState::from_amplitudes(zero);
  CHECK(corollary_reduced_test(z) == Verdict::Fail);
  CHECK_NEAR(f_spectral(spectrum(reduced_states(z).ab)), 2.0, 1e-12);
}

TEST_CASE("reduced two-qubit spectrum is {(1+c)/2, (1-c)/2, 0, 0}") {
  Rng rng(29);
  for (int n = 0; n < 200; ++n) {
    const auto psi = random_pure_three_qubit(rng);
    const ReducedStates red = reduced_states(psi);
    const double c = red.c_norm;
    const Spectrum s = spectrum(red.ab);
    CHECK_NEAR(s[0], (1 + c) / 2, 1e-9);
    CHECK_NEAR(s[1], (1 - c) / 2, 1e-9);
    CHECK_NEAR(s[2], 0.0, 1e-9);
    CHECK_NEAR(s[3], 0.0, 1e-9);
    CHECK_NEAR(f_spectral(s), 1 + c * c, 1e-9);
  }
}

TEST_CASE("locality_report fields") {
  const LocalityReport r = locality_report(werner(0.5));
  CHECK_NEAR(r.M, 0.5, 1e-14);
  CHECK_NEAR(r.chsh_max, 2 * std::sqrt(0.5), 1e-14);
  CHECK_NEAR(r.F, 0.5, 1e-14);
  CHECK(r.bell_local == Verdict::Pass);
  CHECK(r.absolutely_local == Verdict::Pass);
  CHECK(r.epsilon == kDefaultEpsilon);
}
