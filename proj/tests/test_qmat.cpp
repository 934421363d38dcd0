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

#include "abslocal/qmat.hpp"
#include "abslocal/sampling.hpp"
#include "abslocal/zoo.hpp"
#include "test_support.hpp"

#include <limits>

using namespace abslocal;

namespace {

StateError::Kind rejection(const Mat4& m) {
  try {
    (void)DensityMatrix::validate(m);
  } catch (const StateError& e) {
    return e.kind();
  }
  FAIL("state was accepted");
  return StateError::Kind::Domain;
}

}  // namespace

TEST_CASE("validate accepts the maximally mixed state and Bell projectors") {
  const DensityMatrix mix = DensityMatrix::validate(Mat4::Identity() / 4.0);
  CHECK(testing::max_abs_diff(mix.matrix(), Mat4::Identity() / 4.0) < 1e-15);
  for (int k = 0; k < 4; ++k)
    CHECK_NOTHROW((void)DensityMatrix::validate(bell_projector(k)));
}

TEST_CASE("validate rejects broken inputs with the right kind") {
  Mat4 m = Mat4::Identity() / 4.0;
  m(0, 1) = 0.5;
  CHECK(rejection(m) == StateError::Kind::NotHermitian);

  CHECK(rejection(Mat4::Identity() / 2.0) == StateError::Kind::TraceNotOne);

  Mat4 neg = Mat4::Zero();
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK(rejection(neg) == StateError::Kind::NotPSD);

  Mat4 nan = Mat4::Identity() / 4.0;
  nan(2, 2) = std::numeric_limits<double>::quiet_NaN();
  CHECK(rejection(nan) == StateError::Kind::NonFinite);
}

TEST_CASE("validate clamps tiny negative eigenvalues") {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0 + 5e-11;
  m(1, 1) = -5e-11;
  const DensityMatrix s = DensityMatrix::validate(m);
  const auto ev = hermitian_eigenvalues(s.matrix());
  CHECK(ev[0] >= 0.0);
  CHECK_NEAR(s.matrix().trace().real(), 1.0, 1e-14);
}

TEST_CASE("pure normalizes its input and rejects the zero vector") {
  Vec4c psi = Vec4c::Zero();
  CHECK_THROWS_AS((void)DensityMatrix::pure(psi), StateError);
  psi(0) = 2.0;
  CHECK_NEAR(DensityMatrix::pure(psi)(0, 0).real(), 1.0, 1e-15);
}

TEST_CASE("Bell table") {
  const double r = 1 / std::sqrt(2.0);
  const Vec4c phi1 = bell_state(0), phi2 = bell_state(1), phi3 = bell_state(2),
              phi4 = bell_state(3);
  CHECK_NEAR(phi1(0).real(), r, 1e-15);
  CHECK_NEAR(phi1(3).real(), r, 1e-15);
  CHECK_NEAR(phi2(3).real(), -r, 1e-15);
  CHECK_NEAR(phi3(1).real(), r, 1e-15);
  CHECK_NEAR(phi3(2).real(), -r, 1e-15);
  CHECK_NEAR(phi4(2).real(), r, 1e-15);
  CHECK((singlet() - phi3).norm() < 1e-15);
  const Mat4 b = bell_basis();
  CHECK((b.adjoint() * b - Mat4::Identity()).norm() < 1e-14);
}

TEST_CASE("to_bloch examples") {
  const BlochForm mix = to_bloch(DensityMatrix::maximally_mixed());
  CHECK(mix.u.norm() < 1e-15);
  CHECK(mix.v.norm() < 1e-15);
  CHECK(mix.T.norm() < 1e-15);

  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const BlochForm w = to_bloch(werner(p));
    CHECK(w.u.norm() < 1e-14);
    CHECK(w.v.norm() < 1e-14);
    CHECK((w.T - Mat3::Identity() * -p).norm() < 1e-14);
  }

  const BlochForm smix = to_bloch(comp_diagonal({0.5, 0.0, 0.0, 0.5}));
  BlochForm want;
  want.T(2, 2) = 1.0;
  CHECK(smix.max_abs_diff(want) < 1e-15);
}

TEST_CASE("to_bloch matches the explicit trace oracle on random states") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const BlochForm b = to_bloch(s);
    const oracle::Bloch o = oracle::bloch(testing::to_array(s));
    for (int k = 0; k < 3; ++k) {
      CHECK_NEAR(b.u(k), o.u[k], 1e-13);
      CHECK_NEAR(b.v(k), o.v[k], 1e-13);
      for (int l = 0; l < 3; ++l) CHECK_NEAR(b.T(k, l), o.T[k][l], 1e-13);
    }
    CHECK((correlation_matrix(s.matrix()) - b.T).norm() < 1e-15);
  }
}

TEST_CASE("from_bloch examples and round trip") {
  const DensityMatrix mix = from_bloch(BlochForm{});
  CHECK(testing::max_abs_diff(mix.matrix(), Mat4::Identity() / 4.0) < 1e-15);

  BlochForm s;
  s.T = -Mat3::Identity();
  CHECK(testing::max_abs_diff(from_bloch(s).matrix(), bell_projector(2)) < 1e-15);

  // diag(1, 1, -1) is the |phi4> projector, a valid state.
  BlochForm p4;
  p4.T = Vec3(1, 1, -1).asDiagonal();
  CHECK(testing::max_abs_diff(from_bloch(p4).matrix(), bell_projector(3)) < 1e-15);

  // diag(1, 1, 1) lies outside the tetrahedron.
  BlochForm bad;
  bad.T = Mat3::Identity();
  CHECK_THROWS_AS((void)from_bloch(bad), StateError);
  try {
    (void)from_bloch(bad);
  } catch (const StateError& e) {
    CHECK(e.kind() == StateError::Kind::NotPSD);
  }

  Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix st = random_hs_state(rng);
    CHECK(testing::max_abs_diff(from_bloch(to_bloch(st)).matrix(), st.matrix()) <
          1e-14);
  }
}

TEST_CASE("spectrum examples") {
  const auto mix = spectrum(DensityMatrix::maximally_mixed()).values();
  for (double a : mix) CHECK_NEAR(a, 0.25, 1e-15);

  for (double p : {0.1, 0.5, 0.9}) {
    const Spectrum s = spectrum(werner(p));
    CHECK_NEAR(s[0], (1 + 3 * p) / 4, 1e-14);
    for (int k = 1; k < 4; ++k) CHECK_NEAR(s[k], (1 - p) / 4, 1e-14);
  }

  for (double lambda : {1.0 / 3.0, 0.5, 0.8})
    for (double theta : {0.3, 0.7854, 1.2}) {
      const Spectrum s = spectrum(gisin(lambda, theta));
      CHECK_NEAR(s[0], lambda, 1e-14);
      CHECK_NEAR(s[1], (1 - lambda) / 2, 1e-14);
      CHECK_NEAR(s[2], (1 - lambda) / 2, 1e-14);
      CHECK_NEAR(s[3], 0.0, 1e-14);
    }
}

TEST_CASE("spectrum agrees with the Jacobi oracle") {
  Rng rng(23);
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const auto lib = hermitian_eigenvalues(s.matrix());
    const auto ref = oracle::hermitian_eigenvalues(testing::to_array(s));
    for (int k = 0; k < 4; ++k) CHECK_NEAR(lib[k], ref[k], 1e-12);
    const Spectrum sp = spectrum(s);
    for (int k = 0; k < 4; ++k) CHECK_NEAR(sp[k], ref[3 - k], 1e-12);
  }
}

TEST_CASE("spectrum is invariant under global unitaries") {
  Rng rng(31);
  for (int n = 0; n < 50; ++n) {
    const DensityMatrix s = random_hs_state(rng);
    const DensityMatrix t = conjugate(s, haar_random_unitary(rng));
    const Spectrum a = spectrum(s), b = spectrum(t);
    for (int k = 0; k < 4; ++k) CHECK_NEAR(a[k], b[k], 1e-12);
  }
}

TEST_CASE("Spectrum::from_values sorts and checks the simplex") {
  const Spectrum s = Spectrum::from_values({0.1, 0.4, 0.2, 0.3});
  CHECK_NEAR(s[0], 0.4, 1e-15);
  CHECK_NEAR(s[3], 0.1, 1e-15);
  CHECK_THROWS_AS((void)Spectrum::from_values({0.5, 0.5, 0.5, 0.0}), StateError);
  CHECK_THROWS_AS((void)Spectrum::from_values({1.2, -0.2, 0.0, 0.0}), StateError);
}

TEST_CASE("reduced states: GHZ, W and product") {
  const double r = 1 / std::sqrt(2.0);
  PureThreeQubitState::Amplitudes ghz{};
  ghz[0] = r;
  ghz[7] = r;
  const ReducedStates g = reduced_states(PureThreeQubitState::from_amplitudes(ghz));
  CHECK_NEAR(g.c_norm, 0.0, 1e-15);
  Mat4 want = Mat4::Zero();
  want(0, 0) = want(3, 3) = 0.5;
  CHECK(testing::max_abs_diff(g.ab.matrix(), want) < 1e-15);

  const double t = 1 / std::sqrt(3.0);
  PureThreeQubitState::Amplitudes w{};
  w[1] = w[2] = w[4] = t;
  CHECK_NEAR(reduced_states(PureThreeQubitState::from_amplitudes(w)).c_norm,
             1.0 / 3.0, 1e-14);

  PureThreeQubitState::Amplitudes zero{};
  zero[0] = 1.0;
  const ReducedStates z = reduced_states(PureThreeQubitState::from_amplitudes(zero));
  CHECK_NEAR(z.c_norm, 1.0, 1e-15);
  CHECK_NEAR(z.ab(0, 0).real(), 1.0, 1e-15);

  PureThreeQubitState::Amplitudes bad{};
  bad[0] = 2.0;
  CHECK_THROWS_AS((void)PureThreeQubitState::from_amplitudes(bad), StateError);
  CHECK_THROWS_AS((void)PureThreeQubitState::normalized({}), StateError);
}

TEST_CASE("reduced states match the brute-force partial trace") {
  Rng rng(41);
  for (int n = 0; n < 100; ++n) {
    const PureThreeQubitState psi = random_pure_three_qubit(rng);
    const ReducedStates red = reduced_states(psi);
    const oracle::Reduced ref = oracle::partial_traces(psi.amplitudes());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(std::abs(red.ab(i, j) - ref.ab[i][j]) < 1e-14);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(red.c(i, j) - ref.c[i][j]) < 1e-14);
    const double cx = 2 * ref.c[0][1].real(), cy = -2 * ref.c[0][1].imag(),
                 cz = (ref.c[0][0] - ref.c[1][1]).real();
    CHECK_NEAR(red.c_norm, std::sqrt(cx * cx + cy * cy + cz * cz), 1e-14);
  }
}
