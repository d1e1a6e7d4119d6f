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
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gyrator/apps.h"
#include "gyrator/error.h"
#include "gyrator/hgf.h"

namespace gyrator {

const char* BackendName(Backend backend) {
  switch (backend) {
    case Backend::kCcc:
      return "ccc";
    case Backend::kDhgf:
      return "dhgf";
    case Backend::kDfrft2:
      return "dfrft2";
  }
  return "unknown";
}

Backend ParseBackend(const std::string& name) {
  for (Backend b : {Backend::kCcc, Backend::kDhgf, Backend::kDfrft2}) {
    if (name == BackendName(b)) return b;
  }
  Fail(ErrorKind::kUsage, "unknown backend '" + name + "' (ccc, dhgf, dfrft2)");
}

ComplexField BackendForward(Backend backend, const ComplexField& g, Angle alpha) {
  switch (backend) {
    case Backend::kCcc:
      return DgtCcc(g, alpha);
    case Backend::kDhgf:
      return DgtDhgf(g, alpha, *CachedHgfBasis(g.n1()));
    case Backend::kDfrft2:
      return Dfrft2Separable(g, alpha, alpha, *CachedHgfBasis(g.n1()));
  }
  return g;
}

ComplexField BackendInverse(Backend backend, const ComplexField& g, Angle alpha) {
  return BackendForward(backend, g, -alpha);
}

std::vector<int> SortPermutation(const ComplexField& coeffs) {
  std::vector<double> mag(coeffs.size());
  for (size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(coeffs.data()[i]);
  std::vector<int> perm(coeffs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return mag[a] < mag[b]; });
  return perm;
}

namespace {

void CheckPayload(const WatermarkKey& key, size_t total, size_t n1, size_t n2) {
  if (key.q < 0 || key.l < 0 ||
      static_cast<size_t>(key.q) + static_cast<size_t>(key.l) > total) {
    Fail(ErrorKind::kRange, "payload ranks exceed the number of coefficients");
  }
  if (n1 != static_cast<size_t>(key.l) || n2 != static_cast<size_t>(key.l)) {
    Fail(ErrorKind::kRange, "watermark length must equal L");
  }
}

}  // namespace

ComplexField WatermarkEmbed(const ComplexField& host, const std::vector<double>& w1,
                            const std::vector<double>& w2, WatermarkKey& key) {
  CheckPayload(key, host.size(), w1.size(), w2.size());
  ComplexField s = BackendForward(key.backend, host, key.alpha);
  key.permutation = SortPermutation(s);
  for (int l = 0; l < key.l; ++l) {
    s.data()[key.permutation[key.q + l]] += Complex(key.k1 * w1[l], key.k2 * w2[l]);
  }
  ComplexField out = BackendInverse(key.backend, s, key.alpha);
  out.set_intervals(host.dx(), host.dy());
  return out;
}

std::pair<std::vector<double>, std::vector<double>> WatermarkExtract(
    const ComplexField& watermarked, const ComplexField& host,
    const WatermarkKey& key) {
  if (key.k1 == 0.0 || key.k2 == 0.0) {
    Fail(ErrorKind::kDegenerateKey, "embedding strengths must be nonzero");
  }
  if (watermarked.n1() != host.n1() || watermarked.n2() != host.n2()) {
    Fail(ErrorKind::kShape, "watermarked image and host differ in size");
  }
  CheckPayload(key, host.size(), key.l, key.l);
  const ComplexField s = BackendForward(key.backend, host, key.alpha);
  const ComplexField sw = BackendForward(key.backend, watermarked, key.alpha);
  const std::vector<int> perm = SortPermutation(s);
  std::vector<double> w1(key.l), w2(key.l);
  for (int l = 0; l < key.l; ++l) {
    const int idx = perm[key.q + l];
    const Complex d = sw.data()[idx] - s.data()[idx];
    w1[l] = d.real() / key.k1;
    w2[l] = d.imag() / key.k2;
  }
  return {std::move(w1), std::move(w2)};
}

Complex DetectorResponseCoefficients(const ComplexField& coeffs,
                                     const std::vector<double>& w1,
                                     const std::vector<double>& w2,
                                     const WatermarkKey& key) {
  if (key.permutation.size() != coeffs.size()) {
    Fail(ErrorKind::kConfig, "key carries no permutation for this size");
  }
  CheckPayload(key, coeffs.size(), w1.size(), w2.size());
  Complex d;
  for (int l = 0; l < key.l; ++l) {
    d += Complex(w1[l], -w2[l]) * coeffs.data()[key.permutation[key.q + l]];
  }
  return d;
}

Complex DetectorResponse(const ComplexField& suspect, const std::vector<double>& w1,
                         const std::vector<double>& w2, const WatermarkKey& key) {
  return DetectorResponseCoefficients(
      BackendForward(key.backend, suspect, key.alpha), w1, w2, key);
}

std::vector<double> NormalizedResponses(
    const ComplexField& suspect,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& candidates,
    const WatermarkKey& key) {
  const ComplexField s = BackendForward(key.backend, suspect, key.alpha);
  std::vector<double> out;
  out.reserve(candidates.size());
  double peak = 0.0;
  for (const auto& c : candidates) {
    out.push_back(std::abs(DetectorResponseCoefficients(s, c.first, c.second, key)));
    peak = std::max(peak, out.back());
  }
  if (peak > 0.0) {
    for (double& v : out) v /= peak;
  }
  return out;
}

ComplexField SyntheticHost(int n) {
  const double d = std::sqrt(2.0 * M_PI / n);
  ComplexField out(n, n, d, d);
  for (int m = 0; m < n; ++m) {
    const double x = (m + 0.5) / n;
    for (int q = 0; q < n; ++q) {
      const double y = (q + 0.5) / n;
      double v = 90.0 + 60.0 * x - 30.0 * y;
      v += 70.0 * std::exp(-((x - 0.35) * (x - 0.35) + (y - 0.4) * (y - 0.4)) / 0.02);
      v -= 50.0 * std::exp(-((x - 0.7) * (x - 0.7) + (y - 0.65) * (y - 0.65)) / 0.01);
      v += 18.0 * std::sin(2.0 * M_PI * (5.0 * x + 3.0 * y)) *
           std::exp(-((x - 0.6) * (x - 0.6) + (y - 0.25) * (y - 0.25)) / 0.03);
      if (x > 0.15 && x < 0.3 && y > 0.65 && y < 0.9) v += 40.0;
      out.at(m, q) = std::clamp(std::round(v), 0.0, 255.0);
    }
  }
  return out;
}

std::vector<double> WatermarkPattern(int side, int which) {
  std::vector<double> w(static_cast<size_t>(side) * side);
  for (int m = 0; m < side; ++m) {
    for (int n = 0; n < side; ++n) {
      const double x = (m + 0.5) / side - 0.5, y = (n + 0.5) / side - 0.5;
      bool on;
      if (which == 0) {
        const double r = std::hypot(x, y);
        on = (r > 0.3 && r < 0.38) || (std::abs(x) < 0.04 && std::abs(y) < 0.25);
      } else {
        on = (std::abs(x - y) < 0.05 && std::abs(x) < 0.35) ||
             (std::abs(x + y) < 0.05 && std::abs(x) < 0.35);
      }
      w[static_cast<size_t>(m) * side + n] = on ? 255.0 : 0.0;
    }
  }
  return w;
}

ComplexField AddGaussianNoise(const ComplexField& f, double variance, uint64_t seed) {
  ComplexField out = f;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance));
  for (Complex& v : out.data()) v += normal(rng);
  return out;
}

}  // namespace gyrator
