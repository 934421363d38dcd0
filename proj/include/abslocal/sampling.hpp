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

#include "abslocal/qmat.hpp"

#include <cstdint>
#include <random>

namespace abslocal {

using Rng = std::mt19937_64;

/// 4x4 unitary matrix, checked on construction.
class GlobalUnitary {
 public:
  /// Requires U^dagger U = I and |det U| = 1, both to 1e-10.
  static GlobalUnitary validate(const Mat4& m);

  const Mat4& matrix() const noexcept { return m_; }

 private:
  explicit GlobalUnitary(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal folded back into Q. Deterministic per seed.
GlobalUnitary haar_random_unitary(std::uint64_t seed);
GlobalUnitary haar_random_unitary(Rng& rng);
Mat2 haar_random_unitary_2(Rng& rng);
/// U_A (x) U_B with independent Haar factors.
GlobalUnitary random_local_unitary(Rng& rng);

/// Hilbert-Schmidt random state G G^dagger / Tr, G complex Ginibre.
DensityMatrix random_hs_state(Rng& rng);
/// Uniformly random (Dirichlet(1,1,1,1)) point of the probability simplex.
std::array<double, 4> random_simplex_point(Rng& rng);
/// Haar-random pure state of three qubits.
PureThreeQubitState random_pure_three_qubit(Rng& rng);

/// U sigma U^dagger.
Mat4 conjugate(const Mat4& sigma, const Mat4& u);
DensityMatrix conjugate(const DensityMatrix& sigma, const GlobalUnitary& u);

}  // namespace abslocal
