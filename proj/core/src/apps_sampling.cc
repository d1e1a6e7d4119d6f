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

#include <cmath>
#include <random>
#include <string>

#include "gyrator/apps.h"
#include "gyrator/error.h"
#include "gyrator/spectral.h"

namespace gyrator {

namespace {

double MaxRadius(const ComplexField& f) {
  return std::hypot(f.m_offset(), f.n_offset());
}

void ApplyDiskMask(ComplexField& f, double radius) {
  if (radius > MaxRadius(f) + 1e-12) {
    Fail(ErrorKind::kRange, "mask radius " + std::to_string(radius) +
                                " exceeds the grid half-diagonal");
  }
  if (radius < 0.0) Fail(ErrorKind::kRange, "mask radius must be nonnegative");
  for (int p = 0; p < f.n1(); ++p) {
    const double pc = p - f.m_offset();
    for (int q = 0; q < f.n2(); ++q) {
      const double qc = q - f.n_offset();
      if (pc * pc + qc * qc > radius * radius) f.at(p, q) = 0.0;
    }
  }
}

}  // namespace

ComplexField GyratorBandlimitedSignal(int n, double dx, Angle alpha,
                                      double radius, uint64_t seed) {
  const double du = 2.0 * M_PI * std::abs(std::sin(alpha.rad())) / (n * dx);
  ComplexField spectrum(n, n, du, du);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int p = 0; p < n; ++p) {
    const double pc = p - spectrum.m_offset();
    for (int q = 0; q < n; ++q) {
      const double qc = q - spectrum.n_offset();
      const double re = normal(rng), im = normal(rng);
      if (pc * pc + qc * qc <= radius * radius) spectrum.at(p, q) = Complex(re, im);
    }
  }
  return DgtDft(spectrum, -alpha);
}

ComplexField GyratorLowpassReconstruct(const ComplexField& samples, Angle alpha,
                                       double mask_radius) {
  ComplexField spectrum = DgtDft(samples, alpha);
  ApplyDiskMask(spectrum, mask_radius);
  ComplexField out = DgtDft(spectrum, -alpha);
  out.set_intervals(samples.dx(), samples.dy());
  return out;
}

ComplexField FourierLowpassReconstruct(const ComplexField& samples,
                                       double mask_radius) {
  ComplexField spectrum = CenteredDft2(samples, -1);
  ApplyDiskMask(spectrum, mask_radius);
  ComplexField out = CenteredDft2(spectrum, +1);
  const double scale = 1.0 / (static_cast<double>(samples.n1()) * samples.n2());
  for (Complex& v : out.data()) v *= scale;
  out.set_intervals(samples.dx(), samples.dy());
  return out;
}

SamplingDemoResult RunSamplingDemo(const SamplingDemoConfig& config) {
  const Angle alpha = Angle::Degrees(config.alpha_deg);
  SamplingDemoResult r;
  r.signal = GyratorBandlimitedSignal(config.n, config.dx, alpha, config.radius,
                                      config.seed);
  r.du = 2.0 * M_PI * std::abs(std::sin(alpha.rad())) / (config.n * config.dx);
  r.gyrator_reconstruction = GyratorLowpassReconstruct(r.signal, alpha, config.radius);
  r.fourier_reconstruction = FourierLowpassReconstruct(r.signal, config.radius);
  r.gyrator_nrmse = Nrmse(r.signal, r.gyrator_reconstruction);
  r.fourier_nrmse = Nrmse(r.signal, r.fourier_reconstruction);
  return r;
}

}  // namespace gyrator
