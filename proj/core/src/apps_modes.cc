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

#include <algorithm>
#include <cmath>
#include <vector>

#include "gyrator/apps.h"
#include "gyrator/hgf.h"

namespace gyrator {

ComplexField SampledHgfMode(int k, int l, int n, bool half_sample) {
  const double d = std::sqrt(2.0 * M_PI / n);
  const double c = half_sample ? 0.5 * (n - 1) : n / 2;
  std::vector<double> hx(n), hy(n);
  for (int m = 0; m < n; ++m) {
    hx[m] = HermiteFunction(k, (m - c) * d);
    hy[m] = HermiteFunction(l, (m - c) * d);
  }
  ComplexField out(n, n, d, d);
  for (int m = 0; m < n; ++m) {
    for (int q = 0; q < n; ++q) out.at(m, q) = hx[m] * hy[q];
  }
  const double norm = std::sqrt(out.energy());
  if (norm > 0.0) {
    for (Complex& v : out.data()) v /= norm;
  }
  return out;
}

ComplexField ModeConvert(int k, int l, Angle alpha, int n, DgtMethod method,
                         const DispatchPolicy& policy) {
  const ComplexField g = SampledHgfMode(k, l, n, method == DgtMethod::kDhgf);
  DgtOptions options;
  options.dispatch = policy;
  return Dgt(g, alpha, method, options);
}

double RingAngularDeviation(const ComplexField& f, bool half_sample,
                            int sectors) {
  const double c1 = half_sample ? 0.5 * (f.n1() - 1) : f.m_offset();
  const double c2 = half_sample ? 0.5 * (f.n2() - 1) : f.n_offset();
  const int rings = static_cast<int>(std::hypot(f.n1(), f.n2())) + 2;
  std::vector<double> sum(static_cast<size_t>(rings) * sectors, 0.0);
  std::vector<int> count(sum.size(), 0);
  std::vector<double> energy(rings, 0.0);
  for (int m = 0; m < f.n1(); ++m) {
    for (int n = 0; n < f.n2(); ++n) {
      const double x = m - c1, y = n - c2;
      const int ring = static_cast<int>(std::lround(std::hypot(x, y)));
      int sector = static_cast<int>((std::atan2(y, x) + M_PI) / (2.0 * M_PI) * sectors);
      sector = std::clamp(sector, 0, sectors - 1);
      const double a = std::abs(f.at(m, n));
      sum[static_cast<size_t>(ring) * sectors + sector] += a;
      count[static_cast<size_t>(ring) * sectors + sector] += 1;
      energy[ring] += a * a;
    }
  }
  double num = 0.0, den = 0.0;
  for (int r = 0; r < rings; ++r) {
    bool full = true;
    for (int s = 0; s < sectors; ++s) full = full && count[r * sectors + s] > 0;
    if (!full || energy[r] == 0.0) continue;
    double mean = 0.0;
    std::vector<double> avg(sectors);
    for (int s = 0; s < sectors; ++s) {
      avg[s] = sum[r * sectors + s] / count[r * sectors + s];
      mean += avg[s];
    }
    mean /= sectors;
    if (mean == 0.0) continue;
    double var = 0.0;
    for (double v : avg) var += (v - mean) * (v - mean);
    const double spread = std::sqrt(var / sectors) / mean;
    num += energy[r] * spread;
    den += energy[r];
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace gyrator
