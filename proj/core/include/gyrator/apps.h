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

#ifndef GYRATOR_APPS_H_
#define GYRATOR_APPS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gyrator/angle.h"
#include "gyrator/field.h"
#include "gyrator/transforms.h"

namespace gyrator {

// ---------------------------------------------------------------------------
// Mode conversion.

// HG_k(x) HG_l(y) sampled with interval sqrt(2 pi / n), unit energy.
ComplexField SampledHgfMode(int k, int l, int n, bool half_sample = false);

// Gyrator transform of a sampled HG mode. At 45 and 135 degrees the result
// is a Laguerre-Gaussian mode.
ComplexField ModeConvert(int k, int l, Angle alpha, int n, DgtMethod method,
                         const DispatchPolicy& policy = {});

// Circular-symmetry statistic of |f| about the grid center: the magnitude is
// averaged over annuli of one sample width split into angular sectors, and
// the relative spread across sectors is averaged over annuli with energy
// weights. Zero for a perfectly symmetric pattern.
double RingAngularDeviation(const ComplexField& f, bool half_sample = false,
                            int sectors = 16);

// ---------------------------------------------------------------------------
// Gyrator-domain sampling.

// Signal whose DGT at alpha is confined to a centered disk of the given
// radius (index units). Grid is n x n with interval dx.
ComplexField GyratorBandlimitedSignal(int n, double dx, Angle alpha,
                                      double radius, uint64_t seed);

// Forward DGT-DFT, zero outside the centered disk, inverse DGT-DFT.
ComplexField GyratorLowpassReconstruct(const ComplexField& samples, Angle alpha,
                                       double mask_radius);

// The same pipeline with a plain centered DFT in place of the DGT.
ComplexField FourierLowpassReconstruct(const ComplexField& samples,
                                       double mask_radius);

struct SamplingDemoResult {
  ComplexField signal;
  ComplexField gyrator_reconstruction;
  ComplexField fourier_reconstruction;
  double gyrator_nrmse = 0.0;
  double fourier_nrmse = 0.0;
  double du = 0.0;
};

struct SamplingDemoConfig {
  int n = 100;
  double dx = 0.666;
  double alpha_deg = 15.0;
  double radius = 12.0;
  uint64_t seed = 11;
};

SamplingDemoResult RunSamplingDemo(const SamplingDemoConfig& config);

// ---------------------------------------------------------------------------
// Shared transform backends for watermarking and encryption.

enum class Backend { kCcc, kDhgf, kDfrft2 };

const char* BackendName(Backend backend);
Backend ParseBackend(const std::string& name);

// Forward transform at alpha; Dfrft2 uses alpha on both axes.
ComplexField BackendForward(Backend backend, const ComplexField& g, Angle alpha);
// Exact inverse of BackendForward.
ComplexField BackendInverse(Backend backend, const ComplexField& g, Angle alpha);

// ---------------------------------------------------------------------------
// Watermarking.

struct WatermarkKey {
  Angle alpha = Angle::Degrees(45.0);
  int q = 8000;
  int l = 4096;
  double k1 = 0.15;
  double k2 = 0.15;
  Backend backend = Backend::kCcc;
  // Coefficient indices in ascending magnitude order of the host transform,
  // ties broken by row-major index. Filled by WatermarkEmbed.
  std::vector<int> permutation;
};

// Stable ascending sort of |coeffs|.
std::vector<int> SortPermutation(const ComplexField& coeffs);

// Adds k1 w1 + j k2 w2 to the coefficients ranked q+1 .. q+l and inverts.
// Stores the host permutation in key. The result is complex.
ComplexField WatermarkEmbed(const ComplexField& host, const std::vector<double>& w1,
                            const std::vector<double>& w2, WatermarkKey& key);

// Non-blind inverse of the embedding rule using the host permutation.
std::pair<std::vector<double>, std::vector<double>> WatermarkExtract(
    const ComplexField& watermarked, const ComplexField& host,
    const WatermarkKey& key);

// d = sum (w1 - j w2) S_suspect at the key's ranks q+1 .. q+l.
Complex DetectorResponse(const ComplexField& suspect, const std::vector<double>& w1,
                         const std::vector<double>& w2, const WatermarkKey& key);

// Transforms the suspect once and returns |d| / max |d| for each candidate
// pair.
std::vector<double> NormalizedResponses(
    const ComplexField& suspect,
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& candidates,
    const WatermarkKey& key);

// Same as DetectorResponse, on already transformed coefficients.
Complex DetectorResponseCoefficients(const ComplexField& coeffs,
                                     const std::vector<double>& w1,
                                     const std::vector<double>& w2,
                                     const WatermarkKey& key);

// Deterministic smooth test image with values in [0, 255] and interval
// sqrt(2 pi / n).
ComplexField SyntheticHost(int n);

// Deterministic side x side binary-ish pattern with values in [0, 255],
// flattened row-major. which selects one of two designs.
std::vector<double> WatermarkPattern(int side, int which);

// Adds real white Gaussian noise of the given variance.
ComplexField AddGaussianNoise(const ComplexField& f, double variance, uint64_t seed);

// ---------------------------------------------------------------------------
// Encryption.

struct CryptoKey {
  Angle alpha = Angle::Degrees(40.0);
  int bits = 16;
  // One logistic-map seed per bit plane, most significant plane first.
  std::vector<double> x0;
  double r = 3.99;
  int burn_in = 1000;
  // Side of the centered block of coefficients to encrypt; 0 means all.
  int region = 0;
  Backend backend = Backend::kCcc;
};

struct QuantMeta {
  int bits = 16;
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
};

struct EncryptedImage {
  ComplexField image;
  QuantMeta meta;
};

// Throws weak-key for seeds outside (0, 1) or at 0.5, range for bad sizes.
void ValidateCryptoKey(const CryptoKey& key, int n);

// Deterministic seeds for K planes derived from an integer.
std::vector<double> DeriveSeeds(int bits, uint64_t seed);

// Bits of one keystream plane.
std::vector<uint8_t> LogisticBits(double x0, double r, int burn_in, size_t count);

EncryptedImage Encrypt(const ComplexField& image, const CryptoKey& key);
ComplexField Decrypt(const ComplexField& encrypted, const QuantMeta& meta,
                     const CryptoKey& key);

// Quantize-dequantize without encryption.
ComplexField QuantizeRoundTrip(const ComplexField& image, const CryptoKey& key);

}  // namespace gyrator

#endif  // GYRATOR_APPS_H_
