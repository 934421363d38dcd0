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

// Batched arithmetic kernels for the data-parallel inner loops: scoring
// spectra over a simplex grid, and evaluating the computational-diagonal
// objectives over angle grids.
//
// Every kernel has a scalar reference in `scalar::` and a vectorized variant
// in `avx2::`. The unqualified entry points dispatch once at runtime to the
// best variant the CPU supports. Setting ABSLOCAL_SIMD=scalar forces the
// reference path.

#include <cstddef>
#include <span>

namespace abslocal::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
/// Variant chosen by the dispatcher for this process.
Isa active_isa() noexcept;

/// Sorted spectra in structure-of-arrays form.
struct SpectraView {
  std::span<const double> a1, a2, a3, a4;
  std::size_t size() const noexcept { return a1.size(); }
};

/// Trigonometric samples of an angle pair, one entry per grid point.
struct AnglePairView {
  std::span<const double> sin1, cos1, sin2, cos2;
  std::size_t size() const noexcept { return sin1.size(); }
};

/// Parameters u3, v3, t33 of a state diagonal in the computational basis.
struct CompDiagParams {
  double u3, v3, t33;
};

/// Coefficients of the closed-form correlation eigenvalues after the
/// nonlocal unitary: P = 2a1+a2+a3-1, Q = a2-a3, C = (2a2+2a3-1)^2.
struct Case2Params {
  double p, q, c;
};

/// Per-point outputs of the pair-sum kernel.
struct PairSums {
  std::span<double> ab, ac, bc;
};

// Writes F = (2a1+2a2-1)^2 + (2a1+2a3-1)^2 and purity = sum a_i^2.
using SpectralScoresFn = void (*)(SpectraView, std::span<double> f,
                                  std::span<double> purity);
// Writes max(t33^2+c11^2, t33^2+c22^2, c11^2+c22^2) with
// c11 = u3 cos2 sin1 - v3 sin2 cos1, c22 = v3 cos2 sin1 - u3 sin2 cos1.
using CompDiagObjectiveFn = void (*)(CompDiagParams, AnglePairView,
                                     std::span<double> out);
// s_minus = sin(2x-2y), s_plus = sin(2x+2y); A = (s_minus P + s_plus Q)^2,
// B = (s_minus P - s_plus Q)^2; writes A+B, A+C, B+C.
using Case2PairSumsFn = void (*)(Case2Params, std::span<const double> s_minus,
                                 std::span<const double> s_plus, PairSums out);

namespace scalar {
void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity);
void comp_diag_objective(CompDiagParams p, AnglePairView angles,
                         std::span<double> out);
void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out);
}  // namespace scalar

namespace avx2 {
// Fall back to scalar:: when the build target is not x86-64.
void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity);
void comp_diag_objective(CompDiagParams p, AnglePairView angles,
                         std::span<double> out);
void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out);
}  // namespace avx2

void spectral_scores(SpectraView in, std::span<double> f,
                     std::span<double> purity);
void comp_diag_objective(CompDiagParams p, AnglePairView angles,
                         std::span<double> out);
void case2_pair_sums(Case2Params p, std::span<const double> s_minus,
                     std::span<const double> s_plus, PairSums out);

}  // namespace abslocal::kernels
