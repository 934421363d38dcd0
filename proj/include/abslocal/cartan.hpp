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

// Nonlocal part of the two-qubit Cartan decomposition
//
//   U = (U_A (x) U_B) U_d (V_A (x) V_B),
//   U_d(theta) = exp[i/2 (theta1 X(x)X + theta2 Y(x)Y + theta3 Z(x)Z)],
//
// together with its action on states and on Bloch parameters.
//
// U_d is diagonal in the Bell basis (qmat.hpp ordering) with eigenvalue
// exp(-i lambda_k) on phi_k, where
//
//   lambda1 = x - y + z,  lambda2 = -x + y + z,
//   lambda3 = -x - y - z, lambda4 = x + y - z,
//
// and (x, y, z) = -(theta1, theta2, theta3) / 2.

#include "abslocal/qmat.hpp"
#include "abslocal/sampling.hpp"

#include <array>
#include <cstdint>

namespace abslocal {

struct CartanAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;

  /// Angles reduced to [0, 2pi). Throws Domain on non-finite input.
  static CartanAngles canonical(double t1, double t2, double t3);

  double operator[](int k) const { return k == 0 ? theta1 : k == 1 ? theta2 : theta3; }

  /// Bell-phase parameters (x, y, z) = -(theta1, theta2, theta3) / 2.
  std::array<double, 3> bell_phase_params() const;
  /// lambda_1..lambda_4.
  std::array<double, 4> bell_phases() const;
};

/// U_d built from its Bell-basis spectral form.
GlobalUnitary build_ud(const CartanAngles& angles);
/// U_d as the product of the three commuting Pauli exponentials.
Mat4 build_ud_exponential(const CartanAngles& angles);

/// Transformation of (u, v, T) under sigma -> U_d sigma U_d^dagger, written
/// out parameter by parameter (i, j, k distinct, Levi-Civita signs):
///
///   u'_k  = u_k ci cj + v_k si sj + e_ijk (T_ij ci sj - T_ji si cj)
///   v'_k  = v_k ci cj + u_k si sj + e_ijk (T_ji ci sj - T_ij si cj)
///   T'_ij = T_ij ci cj + T_ji si sj - e_ijk (u_k ci sj - v_k si cj)
///
/// with ci = cos theta_i, si = sin theta_i. Diagonal T entries are invariant.
BlochForm act_bloch(const BlochForm& b, const CartanAngles& angles);

/// Eigenvalues of T'^T T' for diag(a1..a4) in the computational basis after
/// U_d with Bell-phase parameters x, y (z does not enter):
///
///   A = [sin(2x-2y)(2a1+a2+a3-1) + sin(2x+2y)(a2-a3)]^2
///   B = [sin(2x-2y)(2a1+a2+a3-1) - sin(2x+2y)(a2-a3)]^2
///   C = (2a2+2a3-1)^2
struct CompDiagEigenvalues {
  double a, b, c;
};
CompDiagEigenvalues eigvals_comp_diag(const Spectrum& s, double x, double y);

struct UnitarySearchOptions {
  std::size_t samples = 2000;
  bool refine = true;
  std::uint64_t seed = 0;
  /// Best sampled unitaries used as refinement seeds.
  std::size_t refine_starts = 3;
};

struct UnitarySearchResult {
  /// Max of M over the identity and the sampled unitaries.
  double sampled_max = 0.0;
  /// Max after Cartan-parameter refinement (== sampled_max without refine).
  double refined_max = 0.0;
  double value() const { return refined_max; }
};

/// Lower bound on sup_U M(U sigma U^dagger) from Haar sampling, optionally
/// refined by simplex ascent over U_d(theta)(V_A (x) V_B). The left local
/// factor is dropped because M is invariant under it.
UnitarySearchResult max_M_over_unitaries(const DensityMatrix& sigma,
                                         const UnitarySearchOptions& options);

}  // namespace abslocal
