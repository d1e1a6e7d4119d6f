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

#include "fft.h"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <vector>

#include "parallel.h"

namespace gyrator::internal {

namespace {

Eigen::FFT<double>& Engine() {
  thread_local Eigen::FFT<double> fft = [] {
    Eigen::FFT<double> f;
    f.SetFlag(Eigen::FFT<double>::Unscaled);
    return f;
  }();
  return fft;
}

}  // namespace

void Fft(std::vector<Complex>& data, int sign) {
  // kissfft does not handle a single point.
  if (data.size() <= 1) return;
  thread_local std::vector<Complex> out;
  out.resize(data.size());
  if (sign < 0) {
    Engine().fwd(out, data);
  } else {
    Engine().inv(out, data);
  }
  data.swap(out);
}

void Fft2(std::vector<Complex>& data, int rows, int cols, int sign) {
  ParallelFor(rows, [&](int begin, int end) {
    std::vector<Complex> row(cols);
    for (int r = begin; r < end; ++r) {
      std::copy_n(data.begin() + static_cast<size_t>(r) * cols, cols,
                  row.begin());
      Fft(row, sign);
      std::copy_n(row.begin(), cols,
                  data.begin() + static_cast<size_t>(r) * cols);
    }
  });
  ParallelFor(cols, [&](int begin, int end) {
    std::vector<Complex> col(rows);
    for (int c = begin; c < end; ++c) {
      for (int r = 0; r < rows; ++r) col[r] = data[static_cast<size_t>(r) * cols + c];
      Fft(col, sign);
      for (int r = 0; r < rows; ++r) data[static_cast<size_t>(r) * cols + c] = col[r];
    }
  });
}

int NextSmoothSize(int n) {
  for (int m = std::max(n, 1);; ++m) {
    int r = m;
    for (int p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace gyrator::internal
