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
#include <random>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "gyrator/apps.h"
#include "gyrator/error.h"
#include "test_util.h"

namespace gyrator {
namespace {

using Pattern = std::vector<double>;

ComplexField AsField(const Pattern& p, int side) {
  ComplexField f(side, side);
  for (int i = 0; i < side * side; ++i) f.data()[i] = p[i];
  return f;
}

ComplexField Magnitude(const ComplexField& f) {
  ComplexField out = f;
  for (Complex& v : out.data()) v = std::abs(v);
  return out;
}

// Modes.

TEST(ModeTest, ZeroAngleReturnsSampledMode) {
  const ComplexField g = SampledHgfMode(2, 5, 64);
  for (DgtMethod m : {DgtMethod::kCcc, DgtMethod::kDft, DgtMethod::kLcc}) {
    EXPECT_EQ(MaxAbsDiff(ModeConvert(2, 5, Angle(), 64, m), g), 0.0) << MethodName(m);
  }
  EXPECT_EQ(MaxAbsDiff(ModeConvert(2, 5, Angle(), 64, DgtMethod::kDhgf),
                       SampledHgfMode(2, 5, 64, true)),
            0.0);
}

TEST(ModeTest, SampledModeHasUnitEnergy) {
  EXPECT_NEAR(SampledHgfMode(3, 1, 40).energy(), 1.0, 1e-14);
  EXPECT_NEAR(SampledHgfMode(3, 1, 40, true).energy(), 1.0, 1e-14);
}

TEST(ModeTest, FortyFiveDegreesIsCircular) {
  const DispatchPolicy fold{.fold = true};
  const ComplexField hg = SampledHgfMode(2, 5, 128);
  EXPECT_GT(RingAngularDeviation(hg), 0.3);
  for (double deg : {45.0, 135.0}) {
    const ComplexField ccc = ModeConvert(2, 5, Angle::Degrees(deg), 128, DgtMethod::kCcc, fold);
    EXPECT_LE(RingAngularDeviation(ccc), 0.05) << deg;
    const ComplexField dhgf = ModeConvert(2, 5, Angle::Degrees(deg), 128, DgtMethod::kDhgf);
    EXPECT_LE(RingAngularDeviation(dhgf, true), 0.05) << deg;
  }
}

TEST(ModeTest, QuarterTurnIsTransposedMode) {
  const ComplexField want = Magnitude(Transpose(SampledHgfMode(1, 3, 64)));
  for (DgtMethod m : {DgtMethod::kDft, DgtMethod::kCcc}) {
    const ComplexField got = Magnitude(ModeConvert(1, 3, Angle::Degrees(90.0), 64, m));
    EXPECT_LE(Nrmse(want, got), 1e-6) << MethodName(m);
  }
}

// Sampling.

TEST(SamplingTest, DemoSeparatesGyratorAndFourier) {
  const SamplingDemoResult r = RunSamplingDemo({});
  EXPECT_LE(r.gyrator_nrmse, 1e-10);
  EXPECT_GE(r.fourier_nrmse, 0.1);
  EXPECT_NEAR(r.du, 2 * M_PI * std::sin(15.0 * M_PI / 180) / (100 * 0.666), 1e-12);
}

TEST(SamplingTest, FullMaskRoundTrips) {
  const ComplexField g = testing::RandomField(32, 32, 3, 0.4, 0.4);
  const double half_diagonal = std::hypot(16.0, 16.0);
  EXPECT_LE(Nrmse(g, GyratorLowpassReconstruct(g, Angle::Degrees(30.0), half_diagonal)), 1e-9);
}

TEST(SamplingTest, ZeroInZeroOut) {
  const ComplexField z(20, 20, 0.5, 0.5);
  EXPECT_EQ(GyratorLowpassReconstruct(z, Angle::Degrees(20.0), 5.0).energy(), 0.0);
}

TEST(SamplingTest, OversizedMaskIsRangeError) {
  const ComplexField g(16, 16, 0.5, 0.5);
  try {
    GyratorLowpassReconstruct(g, Angle::Degrees(20.0), 1000.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRange);
  }
}

// Watermarking.

class WatermarkTest : public ::testing::TestWithParam<Backend> {
 protected:
  WatermarkTest()
      : host_(SyntheticHost(256)), w1_(WatermarkPattern(64, 0)), w2_(WatermarkPattern(64, 1)) {}
  ComplexField host_;
  Pattern w1_, w2_;
};

TEST_P(WatermarkTest, ZeroStrengthLeavesHost) {
  WatermarkKey key;
  key.backend = GetParam();
  key.k1 = key.k2 = 0.0;
  EXPECT_LE(Nrmse(host_, WatermarkEmbed(host_, w1_, w2_, key)), 1e-12);
  try {
    WatermarkExtract(host_, host_, key);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateKey);
  }
}

TEST_P(WatermarkTest, RoundTripAndPsnr) {
  WatermarkKey key;
  key.backend = GetParam();
  const ComplexField wm = WatermarkEmbed(host_, w1_, w2_, key);
  EXPECT_NEAR(Psnr(host_, wm), 36.0, 1.0);
  const auto [e1, e2] = WatermarkExtract(wm, host_, key);
  for (size_t i = 0; i < w1_.size(); ++i) {
    ASSERT_NEAR(e1[i], w1_[i], 1e-8);
    ASSERT_NEAR(e2[i], w2_[i], 1e-8);
  }
}

TEST_P(WatermarkTest, NoisyExtractionMatchesNoiseLevel) {
  WatermarkKey key;
  key.backend = GetParam();
  const ComplexField noisy = AddGaussianNoise(WatermarkEmbed(host_, w1_, w2_, key), 100.0, 5);
  EXPECT_NEAR(Psnr(host_, noisy), 27.4, 1.0);
  const auto [e1, e2] = WatermarkExtract(noisy, host_, key);
  // Real noise of variance 100 leaves about 50 on each coefficient part.
  const double expected = 20 * std::log10(255 * 0.15 / std::sqrt(50.0));
  EXPECT_NEAR(Psnr(AsField(w1_, 64), AsField(e1, 64)), expected, 1.0);
  EXPECT_NEAR(Psnr(AsField(w2_, 64), AsField(e2, 64)), expected, 1.0);
}

TEST_P(WatermarkTest, DetectorPicksEmbeddedSet) {
  WatermarkKey key;
  key.backend = GetParam();
  const ComplexField noisy = AddGaussianNoise(WatermarkEmbed(host_, w1_, w2_, key), 100.0, 5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> u(0, 255);
  std::vector<std::pair<Pattern, Pattern>> cands;
  for (int i = 0; i < 1000; ++i) {
    if (i == 199) {
      cands.emplace_back(w1_, w2_);
      continue;
    }
    Pattern x(4096), y(4096);
    for (double& v : x) v = u(rng);
    for (double& v : y) v = u(rng);
    cands.emplace_back(std::move(x), std::move(y));
  }
  const std::vector<double> r = NormalizedResponses(noisy, cands, key);
  EXPECT_EQ(std::max_element(r.begin(), r.end()) - r.begin(), 199);
  EXPECT_EQ(r[199], 1.0);
  double second = 0.0;
  for (int i = 0; i < 1000; ++i) {
    if (i != 199) second = std::max(second, r[i]);
  }
  EXPECT_LE(second, 0.8);
}

INSTANTIATE_TEST_SUITE_P(Backends, WatermarkTest,
                         ::testing::Values(Backend::kCcc, Backend::kDhgf, Backend::kDfrft2),
                         [](const auto& info) { return std::string(BackendName(info.param)); });

TEST(DetectorTest, ZeroCandidateGivesZero) {
  const ComplexField host = SyntheticHost(128);
  WatermarkKey key;
  key.q = 2000;
  key.l = 1024;
  const Pattern w = WatermarkPattern(32, 0);
  const ComplexField wm = WatermarkEmbed(host, w, w, key);
  const Pattern zero(1024, 0.0);
  EXPECT_EQ(DetectorResponse(wm, zero, zero, key), Complex(0.0, 0.0));
}

TEST(DetectorTest, ResponseIsLinear) {
  const ComplexField host = SyntheticHost(128);
  WatermarkKey key;
  key.q = 2000;
  key.l = 1024;
  const Pattern a = WatermarkPattern(32, 0), b = WatermarkPattern(32, 1);
  const ComplexField wm = WatermarkEmbed(host, a, b, key);
  Pattern s1(1024), s2(1024);
  for (int i = 0; i < 1024; ++i) {
    s1[i] = 2 * a[i] - 3 * b[i];
    s2[i] = 2 * b[i] - 3 * a[i];
  }
  const Complex want = 2.0 * DetectorResponse(wm, a, b, key) - 3.0 * DetectorResponse(wm, b, a, key);
  EXPECT_LE(std::abs(DetectorResponse(wm, s1, s2, key) - want), 1e-9 * std::abs(want));
}

TEST(DetectorTest, GyratorVarianceBelowFractionalFourier) {
  const ComplexField host = SyntheticHost(256);
  const Pattern w1 = WatermarkPattern(64, 0), w2 = WatermarkPattern(64, 1);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> u(0, 255);
  std::vector<std::pair<Pattern, Pattern>> cands;
  cands.emplace_back(w1, w2);
  for (int i = 0; i < 999; ++i) {
    Pattern x(4096), y(4096);
    for (double& v : x) v = u(rng);
    for (double& v : y) v = u(rng);
    cands.emplace_back(std::move(x), std::move(y));
  }
  auto variance = [&](Backend b) {
    WatermarkKey key;
    key.backend = b;
    const ComplexField noisy = AddGaussianNoise(WatermarkEmbed(host, w1, w2, key), 100.0, 5);
    const std::vector<double> r = NormalizedResponses(noisy, cands, key);
    double m = 0.0, s = 0.0;
    for (size_t i = 1; i < r.size(); ++i) {
      m += r[i];
      s += r[i] * r[i];
    }
    m /= r.size() - 1;
    return s / (r.size() - 1) - m * m;
  };
  EXPECT_LT(variance(Backend::kCcc), variance(Backend::kDfrft2));
}

// Encryption.

CryptoKey TestKey(Backend b) {
  CryptoKey key;
  key.backend = b;
  key.x0 = DeriveSeeds(16, 42);
  return key;
}

class CryptoTest : public ::testing::TestWithParam<Backend> {
 protected:
  CryptoTest() : image_(SyntheticHost(128)) {}
  ComplexField image_;
};

TEST_P(CryptoTest, CorrectKeyRecovers) {
  const CryptoKey key = TestKey(GetParam());
  const EncryptedImage enc = Encrypt(image_, key);
  EXPECT_GT(Nrmse(image_, enc.image), 0.5);
  EXPECT_GE(Psnr(image_, Decrypt(enc.image, enc.meta, key)), 40.0);
}

TEST_P(CryptoTest, WrongKeyFails) {
  const CryptoKey key = TestKey(GetParam());
  const EncryptedImage enc = Encrypt(image_, key);
  for (int plane : {0, 3, 15}) {
    CryptoKey bad = key;
    bad.x0[plane] += 1e-12;
    EXPECT_GT(Nrmse(image_, Decrypt(enc.image, enc.meta, bad)), 0.5) << plane;
  }
  CryptoKey bad = key;
  bad.alpha = Angle::Degrees(40.0001);
  EXPECT_GT(Nrmse(image_, Decrypt(enc.image, enc.meta, bad)), 0.5);
}

TEST_P(CryptoTest, Deterministic) {
  const CryptoKey key = TestKey(GetParam());
  EXPECT_EQ(MaxAbsDiff(Encrypt(image_, key).image, Encrypt(image_, key).image), 0.0);
}

INSTANTIATE_TEST_SUITE_P(Backends, CryptoTest,
                         ::testing::Values(Backend::kCcc, Backend::kDhgf, Backend::kDfrft2),
                         [](const auto& info) { return std::string(BackendName(info.param)); });

TEST(CryptoKeyTest, WeakSeedsRejected) {
  for (double x : {0.0, 0.5, 1.0, -0.2, 1.5}) {
    CryptoKey key = TestKey(Backend::kCcc);
    key.x0[2] = x;
    try {
      ValidateCryptoKey(key, 64);
      FAIL() << x;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kWeakKey);
    }
  }
}

TEST(CryptoKeyTest, SeedCountAndRegionChecked) {
  CryptoKey key = TestKey(Backend::kCcc);
  key.x0.pop_back();
  EXPECT_THROW(ValidateCryptoKey(key, 64), Error);
  key = TestKey(Backend::kCcc);
  key.region = 65;
  EXPECT_THROW(ValidateCryptoKey(key, 64), Error);
}

TEST(CryptoKeyTest, MetadataForOtherK) {
  const ComplexField img = SyntheticHost(32);
  const CryptoKey key = TestKey(Backend::kCcc);
  EncryptedImage enc = Encrypt(img, key);
  enc.meta.bits = 8;
  EXPECT_THROW(Decrypt(enc.image, enc.meta, key), Error);
}

TEST(CryptoKeyTest, LogisticBitsDeterministic) {
  EXPECT_EQ(LogisticBits(0.3, 3.99, 1000, 256), LogisticBits(0.3, 3.99, 1000, 256));
  EXPECT_NE(LogisticBits(0.3, 3.99, 1000, 256), LogisticBits(0.3 + 1e-12, 3.99, 1000, 256));
}

TEST(PartialCryptoTest, FullRegionEqualsWholeImage) {
  const ComplexField img = SyntheticHost(64);
  CryptoKey whole = TestKey(Backend::kCcc);
  CryptoKey full = whole;
  full.region = 64;
  EXPECT_EQ(MaxAbsDiff(Encrypt(img, whole).image, Encrypt(img, full).image), 0.0);
}

TEST(PartialCryptoTest, CentralBlockDegradesAndRecovers) {
  const ComplexField img = SyntheticHost(128);
  CryptoKey key = TestKey(Backend::kCcc);
  key.alpha = Angle::Degrees(70.0);
  key.region = 28;
  const EncryptedImage enc = Encrypt(img, key);
  EXPECT_LT(Psnr(img, enc.image), 20.0);
  EXPECT_GE(Psnr(img, Decrypt(enc.image, enc.meta, key)), 40.0);
}

}  // namespace
}  // namespace gyrator
