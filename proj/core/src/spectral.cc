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

#include "gyrator/spectral.h"

#include <cmath>
#include <vector>

#include "fft.h"
#include "gyrator/error.h"

namespace gyrator {

namespace {

int Wrap(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

}  // namespace

void CenteredDft1(Complex* data, int n, int sign) {
  std::vector<Complex> buf(n);
  const int o = n / 2;
  for (int m = 0; m < n; ++m) buf[Wrap(m - o, n)] = data[m];
  internal::Fft(buf, sign);
  for (int p = 0; p < n; ++p) data[p] = buf[Wrap(p - o, n)];
}

ComplexField CenteredDft2(const ComplexField& g, int sign) {
  if (sign != 1 && sign != -1) Fail(ErrorKind::kRange, "sign must be +1 or -1");
  const int n1 = g.n1(), n2 = g.n2();
  const int o1 = g.m_offset(), o2 = g.n_offset();
  std::vector<Complex> buf(g.size());
  for (int m = 0; m < n1; ++m) {
    const size_t row = static_cast<size_t>(Wrap(m - o1, n1)) * n2;
    for (int n = 0; n < n2; ++n) buf[row + Wrap(n - o2, n2)] = g.at(m, n);
  }
  internal::Fft2(buf, n1, n2, sign);
  ComplexField out(n1, n2, g.dx(), g.dy());
  for (int p = 0; p < n1; ++p) {
    const size_t row = static_cast<size_t>(Wrap(p - o1, n1)) * n2;
    for (int q = 0; q < n2; ++q) out.at(p, q) = buf[row + Wrap(q - o2, n2)];
  }
  return out;
}

ComplexField ChirpGrid(double a, double b, double c, int n1, int n2) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    Fail(ErrorKind::kSingularParameter, "chirp coefficient is not finite");
  }
  ComplexField out(n1, n2);
  const int o1 = n1 / 2, o2 = n2 / 2;
  for (int m = 0; m < n1; ++m) {
    const double mc = m - o1;
    for (int n = 0; n < n2; ++n) {
      const double nc = n - o2;
      out.at(m, n) = std::polar(1.0, a * mc * mc + b * nc * nc + c * mc * nc);
    }
  }
  return out;
}

ComplexField LinearConvolve2(const ComplexField& g, const ComplexField& kernel) {
  const int n1 = g.n1(), n2 = g.n2();
  if (kernel.n1() != 2 * n1 - 1 || kernel.n2() != 2 * n2 - 1) {
    Fail(ErrorKind::kShape, "kernel must be (2*n1-1) x (2*n2-1)");
  }
  const int l1 = 3 * n1 - 2, l2 = 3 * n2 - 2;
  const int p1 = internal::NextPowerOfTwo(l1), p2 = internal::NextPowerOfTwo(l2);
  std::vector<Complex> a(static_cast<size_t>(p1) * p2);
  std::vector<Complex> b(a.size());
  for (int m = 0; m < n1; ++m) {
    for (int n = 0; n < n2; ++n) a[static_cast<size_t>(m) * p2 + n] = g.at(m, n);
  }
  for (int m = 0; m < kernel.n1(); ++m) {
    for (int n = 0; n < kernel.n2(); ++n) {
      b[static_cast<size_t>(m) * p2 + n] = kernel.at(m, n);
    }
  }
  internal::Fft2(a, p1, p2, -1);
  internal::Fft2(b, p1, p2, -1);
  for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  internal::Fft2(a, p1, p2, +1);
  const double scale = 1.0 / (static_cast<double>(p1) * p2);
  ComplexField out(l1, l2, g.dx(), g.dy());
  for (int m = 0; m < l1; ++m) {
    for (int n = 0; n < l2; ++n) {
      out.at(m, n) = a[static_cast<size_t>(m) * p2 + n] * scale;
    }
  }
  return out;
}

ComplexField CentralBlock(const ComplexField& full, int n1, int n2) {
  if (full.n1() != 3 * n1 - 2 || full.n2() != 3 * n2 - 2) {
    Fail(ErrorKind::kShape, "field is not a full (3n-2) extended output");
  }
  ComplexField out(n1, n2, full.dx(), full.dy());
  for (int m = 0; m < n1; ++m) {
    for (int n = 0; n < n2; ++n) out.at(m, n) = full.at(m + n1 - 1, n + n2 - 1);
  }
  return out;
}

}  // namespace gyrator
