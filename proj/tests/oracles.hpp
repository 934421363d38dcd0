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

// Reference computations used only by the tests. Nothing here calls into the
// library's linear algebra: plain arrays, cyclic Jacobi, explicit index loops.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using CMat4 = std::array<std::array<cd, 4>, 4>;
using RMat3 = std::array<std::array<double, 3>, 3>;

// Eigenvalues of a real symmetric n x n matrix (row-major), ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Hermitian 4x4 eigenvalues via the 8x8 real embedding [[Re, -Im], [Im, Re]],
// whose spectrum is the Hermitian spectrum with every value doubled.
inline std::array<double, 4> hermitian_eigenvalues(const CMat4& h) {
  std::vector<double> e(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      e[i * 8 + j] = h[i][j].real();
      e[(i + 4) * 8 + j + 4] = h[i][j].real();
      e[i * 8 + j + 4] = -h[i][j].imag();
      e[(i + 4) * 8 + j] = h[i][j].imag();
    }
  const auto ev = jacobi_eigenvalues(e, 8);
  return {ev[0], ev[2], ev[4], ev[6]};
}

inline std::array<std::array<cd, 2>, 2> pauli(int k) {
  const cd i(0, 1);
  switch (k) {
    case 1: return {{{0, 1}, {1, 0}}};
    case 2: return {{{0, -i}, {i, 0}}};
    case 3: return {{{1, 0}, {0, -1}}};
    default: return {{{1, 0}, {0, 1}}};
  }
}

// Re Tr(rho (s_a (x) s_b)) by explicit summation.
inline double pauli_expectation(const CMat4& rho, int a, int b) {
  const auto pa = pauli(a), pb = pauli(b);
  cd tr = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      tr += rho[r][c] * pa[c >> 1][r >> 1] * pb[c & 1][r & 1];
  return tr.real();
}

struct Bloch {
  std::array<double, 3> u{}, v{};
  RMat3 T{};
};

inline Bloch bloch(const CMat4& rho) {
  Bloch b;
  for (int k = 0; k < 3; ++k) {
    b.u[k] = pauli_expectation(rho, k + 1, 0);
    b.v[k] = pauli_expectation(rho, 0, k + 1);
    for (int l = 0; l < 3; ++l) b.T[k][l] = pauli_expectation(rho, k + 1, l + 1);
  }
  return b;
}

// Sum of the two largest eigenvalues of T^T T.
inline double horodecki_M(const RMat3& t) {
  std::vector<double> g(9, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g[i * 3 + j] += t[k][i] * t[k][j];
  const auto ev = jacobi_eigenvalues(g, 3);
  return ev[1] + ev[2];
}

// Sorted descending spectrum in, F out.
inline double f_of_spectrum(const std::array<double, 4>& a) {
  const double x = 2 * a[0] + 2 * a[1] - 1, y = 2 * a[0] + 2 * a[2] - 1;
  return x * x + y * y;
}

struct Reduced {
  CMat4 ab{};
  std::array<std::array<cd, 2>, 2> c{};
};

// Bit order |a b c>, a most significant.
inline Reduced partial_traces(const std::array<cd, 8>& psi) {
  Reduced r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          for (int c = 0; c < 2; ++c)
            r.ab[2 * a + b][2 * a2 + b2] +=
                psi[4 * a + 2 * b + c] * std::conj(psi[4 * a2 + 2 * b2 + c]);
  for (int c = 0; c < 2; ++c)
    for (int c2 = 0; c2 < 2; ++c2)
      for (int ab = 0; ab < 4; ++ab)
        r.c[c][c2] += psi[2 * ab + c] * std::conj(psi[2 * ab + c2]);
  return r;
}

inline CMat4 multiply(const CMat4& x, const CMat4& y) {
  CMat4 z{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) z[i][j] += x[i][k] * y[k][j];
  return z;
}

inline CMat4 adjoint(const CMat4& x) {
  CMat4 z{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z[i][j] = std::conj(x[j][i]);
  return z;
}

}  // namespace oracle
