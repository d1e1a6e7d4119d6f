// Copyright 2026 The Gyrator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GYRATOR_HGF_H_
#define GYRATOR_HGF_H_

#include <memory>
#include <vector>

#include "gyrator/angle.h"
#include "gyrator/field.h"

namespace gyrator {

// Orthonormal discrete Hermite-Gaussian basis. Column k is the order-k
// function sampled on the half-sample grid (m - (n - 1) / 2) * sqrt(2 pi / n).
class HgfBasis {
 public:
  HgfBasis(int n, std::vector<double> columns);

  int n() const { return n_; }
  double center() const { return 0.5 * (n_ - 1); }
  double interval() const;
  // Sample m of the order-k function.
  double operator()(int m, int k) const { return h_[static_cast<size_t>(m) * n_ + k]; }
  // Row-major n x n storage, columns indexed by order.
  const std::vector<double>& matrix() const { return h_; }

 private:
  int n_;
  std::vector<double> h_;
};

// Orthonormal eigenvectors of the centered DFT. A symmetric DFT-commuting
// tridiagonal matrix fixes the four eigenspaces and the order of each
// vector; within an eigenspace the sampled HGFs are projected and
// orthonormalized in order.
HgfBasis DiscreteHgfBasis(int n);

// Process-wide cache; safe for concurrent use.
std::shared_ptr<const HgfBasis> CachedHgfBasis(int n);

// Normalized Hermite function HG_k(x) = H_k(x) e^{-x^2/2} / sqrt(2^k k! sqrt(pi)).
double HermiteFunction(int k, double x);

// HG_k at (m - (n - 1) / 2) * interval for m in [0, n), scaled to unit
// Euclidean norm.
std::vector<double> SampledHgf(int k, int n, double interval);

// Outer product of basis columns k (along x) and l (along y).
ComplexField Hgf2(int k, int l, const HgfBasis& basis);

// Wigner small-d function with doubled arguments two_j = 2J, two_m1 = 2M1,
// two_m2 = 2M2.
double WignerSmallD(int two_j, int two_m1, int two_m2, double beta);

// Full (2J + 1) x (2J + 1) d-matrix, row-major, entry (a, b) holding
// d^J_{J - a, J - b}(beta). Stable for large J.
std::vector<double> WignerSmallDMatrix(int two_j, double beta);

// e^{-j M1 chi} d^J_{M1, M2}(beta) e^{-j M2 gamma}.
Complex WignerBigD(int two_j, int two_m1, int two_m2, double chi, double beta,
                   double gamma);

// Discrete rotated HGF of order (k, l).
ComplexField Rhgf(int k, int l, const HgfBasis& basis);

// Continuous rotated HGF sampled on an arbitrary grid. With half_sample the
// coordinates are (m - (n - 1) / 2) * d, otherwise (m - floor(n / 2)) * d.
ComplexField SampledRhgf(int k, int l, int n1, int n2, double dx, double dy,
                         bool half_sample);

// Per-shell mixing matrices for one (n, alpha).
struct WignerShellSet {
  int n = 0;
  double alpha = 0.0;
  // shells[L] is a row-major (s + 1) x (s + 1) matrix, s = min(L, 2(n-1) - L).
  std::vector<std::vector<Complex>> shells;

  int size(int shell) const;
};

WignerShellSet BuildShellMatrices(int n, Angle alpha);

// O(N^4) expansion over all rotated HGFs. Oracle only.
ComplexField DgtDhgfDirect(const ComplexField& g, Angle alpha,
                           const HgfBasis& basis);

// Fast path using explicit shell matrices.
ComplexField DgtDhgfFast(const ComplexField& g, Angle alpha,
                         const HgfBasis& basis, const WignerShellSet& shells);

// Fast path that applies each shell in factored form without building the
// mixing matrices.
ComplexField DgtDhgf(const ComplexField& g, Angle alpha, const HgfBasis& basis);

// Separable 2D fractional Fourier transform with per-axis angles.
ComplexField Dfrft2Separable(const ComplexField& g, Angle ax, Angle ay,
                             const HgfBasis& basis);

}  // namespace gyrator

#endif  // GYRATOR_HGF_H_
