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

#ifndef GYRATOR_ABCD_H_
#define GYRATOR_ABCD_H_

#include <array>

#include "gyrator/angle.h"

namespace gyrator {

// 4x4 parameter matrix of a 2D linear canonical transform, stored row-major
// and partitioned as [[A, B], [C, D]] with 2x2 blocks.
class AbcdMatrix {
 public:
  using Storage = std::array<double, 16>;

  // Throws a validation error unless A^T C = C^T A, B^T D = D^T B and
  // A^T D - C^T B = I hold within tol.
  explicit AbcdMatrix(const Storage& m, double tol = 1e-12);

  static AbcdMatrix Identity();

  double operator()(int r, int c) const { return m_[r * 4 + c]; }
  const Storage& values() const { return m_; }

  // Largest residual of the three symplectic conditions.
  static double SymplecticResidual(const Storage& m);

 private:
  Storage m_;
};

AbcdMatrix GyratorMatrix(Angle alpha);

// Plain product m1 * m2, re-validated at 1e-9.
AbcdMatrix Compose(const AbcdMatrix& m1, const AbcdMatrix& m2);

double MaxAbsDiff(const AbcdMatrix& a, const AbcdMatrix& b);

// Factor matrices used by the chirp-convolution decomposition.
AbcdMatrix ChirpMultiplicationMatrix(Angle alpha);
AbcdMatrix ChirpConvolutionMatrix(Angle alpha);
AbcdMatrix AxisSwapMatrix();

}  // namespace gyrator

#endif  // GYRATOR_ABCD_H_
