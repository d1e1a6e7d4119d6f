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

#include "gyrator/abcd.h"

#include <cmath>
#include <string>

#include "gyrator/error.h"

namespace gyrator {

namespace {

using Block = std::array<double, 4>;

Block GetBlock(const AbcdMatrix::Storage& m, int br, int bc) {
  return {m[(2 * br) * 4 + 2 * bc], m[(2 * br) * 4 + 2 * bc + 1],
          m[(2 * br + 1) * 4 + 2 * bc], m[(2 * br + 1) * 4 + 2 * bc + 1]};
}

// x^T y for 2x2 blocks.
Block TMul(const Block& x, const Block& y) {
  return {x[0] * y[0] + x[2] * y[2], x[0] * y[1] + x[2] * y[3],
          x[1] * y[0] + x[3] * y[2], x[1] * y[1] + x[3] * y[3]};
}

AbcdMatrix::Storage FromBlocks(const Block& a, const Block& b, const Block& c,
                               const Block& d) {
  return {a[0], a[1], b[0], b[1], a[2], a[3], b[2], b[3],
          c[0], c[1], d[0], d[1], c[2], c[3], d[2], d[3]};
}

}  // namespace

AbcdMatrix::AbcdMatrix(const Storage& m, double tol) : m_(m) {
  double r = SymplecticResidual(m);
  if (!(r <= tol)) {
    Fail(ErrorKind::kValidation,
         "matrix is not symplectic (residual " + std::to_string(r) + ")");
  }
}

AbcdMatrix AbcdMatrix::Identity() {
  return AbcdMatrix(FromBlocks({1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0},
                               {1, 0, 0, 1}));
}

double AbcdMatrix::SymplecticResidual(const Storage& m) {
  Block a = GetBlock(m, 0, 0), b = GetBlock(m, 0, 1);
  Block c = GetBlock(m, 1, 0), d = GetBlock(m, 1, 1);
  Block atc = TMul(a, c), cta = TMul(c, a);
  Block btd = TMul(b, d), dtb = TMul(d, b);
  Block atd = TMul(a, d), ctb = TMul(c, b);
  const Block eye = {1, 0, 0, 1};
  double r = 0.0;
  for (int i = 0; i < 4; ++i) {
    r = std::max(r, std::abs(atc[i] - cta[i]));
    r = std::max(r, std::abs(btd[i] - dtb[i]));
    r = std::max(r, std::abs(atd[i] - ctb[i] - eye[i]));
  }
  return r;
}

AbcdMatrix GyratorMatrix(Angle alpha) {
  const double c = std::cos(alpha.rad()), s = std::sin(alpha.rad());
  return AbcdMatrix(FromBlocks({c, 0, 0, c}, {0, s, s, 0}, {0, -s, -s, 0},
                               {c, 0, 0, c}));
}

AbcdMatrix Compose(const AbcdMatrix& m1, const AbcdMatrix& m2) {
  AbcdMatrix::Storage out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += m1(r, k) * m2(k, c);
      out[r * 4 + c] = acc;
    }
  }
  return AbcdMatrix(out, 1e-9);
}

double MaxAbsDiff(const AbcdMatrix& a, const AbcdMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) {
    m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  }
  return m;
}

AbcdMatrix ChirpMultiplicationMatrix(Angle alpha) {
  const double s = std::sin(alpha.rad());
  const double csc = 1.0 / s, cot = std::cos(alpha.rad()) / s;
  return AbcdMatrix(FromBlocks({1, 0, 0, 1}, {0, 0, 0, 0}, {-csc, cot, cot, -csc},
                               {1, 0, 0, 1}),
                    1e-9);
}

AbcdMatrix ChirpConvolutionMatrix(Angle alpha) {
  const double s = std::sin(alpha.rad());
  return AbcdMatrix(
      FromBlocks({1, 0, 0, 1}, {s, 0, 0, s}, {0, 0, 0, 0}, {1, 0, 0, 1}));
}

AbcdMatrix AxisSwapMatrix() {
  return AbcdMatrix(
      FromBlocks({0, 1, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}));
}

}  // namespace gyrator
