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

#include "gtest/gtest.h"
#include "gyrator/apps.h"
#include "gyrator/oracle.h"
#include "test_util.h"

namespace gyrator {
namespace {

Grid Square(int n) {
  const double d = std::sqrt(2 * M_PI / n);
  return Grid{n, n, d, d, false};
}

TEST(ClosedFormTest, UnitScaleIsInvariant) {
  const Grid g = Square(21);
  const ComplexField in = ScaledGaussian(1.0, g);
  for (double deg : {0.0, 17.0, 90.0, 133.0}) {
    EXPECT_LE(MaxAbsDiff(GaussianGyratorClosedForm(1.0, Angle::Degrees(deg), g), in), 1e-14);
  }
}

TEST(ClosedFormTest, ZeroAngleAndQuarterTurn) {
  const Grid g{11, 11, 0.3, 0.3, false};
  EXPECT_LE(MaxAbsDiff(GaussianGyratorClosedForm(0.4, Angle(), g), ScaledGaussian(0.4, g)),
            1e-15);
  const ComplexField f = GaussianGyratorClosedForm(0.4, Angle::Degrees(90), g);
  EXPECT_NEAR(std::abs(f.centered(0, 0) - 2.5), 0.0, 1e-14);
  const double u = 3 * 0.3;
  EXPECT_NEAR(std::abs(f.centered(3, 0)), 2.5 * std::exp(-2.5 * u * u / 2), 1e-14);
}

TEST(ClosedFormTest, Periodicity) {
  const Grid g{9, 9, 0.5, 0.5, false};
  const double s = 0.6;
  const double a = 0.7;
  const ComplexField base = GaussianGyratorClosedForm(s, Angle::Radians(a), g);
  EXPECT_LE(MaxAbsDiff(GaussianGyratorClosedForm(s, Angle::Radians(a + 2 * M_PI), g), base),
            1e-13);
  EXPECT_LE(MaxAbsDiff(GaussianGyratorClosedForm(s, Angle::Radians(a + M_PI), g), Reflect(base)),
            1e-13);
}

TEST(AccuracySweepTest, GaussianSixtyDegrees) {
  const SweepInput in{};
  double err[4];
  const DgtMethod methods[4] = {DgtMethod::kLcc, DgtMethod::kDft, DgtMethod::kCcc,
                                DgtMethod::kDhgf};
  for (int i = 0; i < 4; ++i) {
    err[i] = AccuracySweep(methods[i], in, {60.0}, SweepDispatchPolicy())[0].nrmse;
    EXPECT_LE(err[i], 0.05) << MethodName(methods[i]);
  }
  EXPECT_LT(err[2], err[0]);
}

TEST(AccuracySweepTest, ZeroAngleIsExact) {
  for (DgtMethod m : {DgtMethod::kLcc, DgtMethod::kDft, DgtMethod::kCcc, DgtMethod::kDhgf}) {
    EXPECT_EQ(AccuracySweep(m, SweepInput{}, {0.0}, {})[0].nrmse, 0.0) << MethodName(m);
  }
}

TEST(AccuracySweepTest, QuarterTurnIsNearlyExact) {
  for (DgtMethod m : {DgtMethod::kLcc, DgtMethod::kDft}) {
    EXPECT_LE(AccuracySweep(m, SweepInput{}, {90.0}, {})[0].nrmse, 1e-6) << MethodName(m);
  }
}

TEST(AccuracySweepTest, DhgfFlatOnRhgf) {
  SweepInput in;
  in.kind = SweepInput::Kind::kSampledRhgf;
  in.n = 128;
  std::vector<double> alphas;
  for (double a = 10; a <= 170; a += 20) alphas.push_back(a);
  const auto rows = AccuracySweep(DgtMethod::kDhgf, in, alphas, SweepDispatchPolicy());
  double lo = 1e300, hi = 0;
  for (const auto& r : rows) {
    lo = std::min(lo, r.nrmse);
    hi = std::max(hi, r.nrmse);
  }
  EXPECT_LE(hi - lo, 0.25 * hi + 1e-6);
  EXPECT_LE(hi, 1e-6);
}

TEST(MultiplicationCountTest, PublishedValues) {
  EXPECT_EQ(MultiplicationCount(DgtMethod::kDft, 256), 2621440.0);
  EXPECT_EQ(MultiplicationCount(DgtMethod::kCcc, 256), 4980736.0);
  EXPECT_NEAR(MultiplicationCount(DgtMethod::kDhgf, 256), 178957312.0, 1e-6);
  EXPECT_EQ(MultiplicationCount(DgtMethod::kDirect, 256), 4.0 * std::pow(256.0, 4));
  EXPECT_NEAR(MultiplicationCount(DgtMethod::kDhgf, 4), 688.0, 1e-9);
  EXPECT_GT(MultiplicationCount(DgtMethod::kLcc, 4), 1400.0);
}

TEST(MultiplicationCountTest, MonotoneInN) {
  for (DgtMethod m : {DgtMethod::kDirect, DgtMethod::kLcc, DgtMethod::kDft, DgtMethod::kCcc,
                      DgtMethod::kDhgf}) {
    for (int n = 2; n < 600; ++n) {
      EXPECT_LT(MultiplicationCount(m, n), MultiplicationCount(m, n + 1)) << MethodName(m);
    }
  }
}

TEST(ComplexityOrderTest, Chain) {
  const ComplexityReport r = ComplexityOrderCheck({4, 128, 256, 512});
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_FALSE(r.rows[0].ordered);
  EXPECT_LT(r.rows[0].dhgf, r.rows[0].lcc);
  EXPECT_TRUE(r.rows[1].ordered);
  EXPECT_TRUE(r.rows[2].ordered);
  EXPECT_TRUE(r.rows[3].ordered);
  EXPECT_TRUE(r.ordering_holds_from_64);
  EXPECT_FALSE(r.caveat.empty());
}

// The formulas put the DHGF count below the LCC count at N = 64, so the
// chain fails there.
TEST(ComplexityOrderTest, SixtyFourBreaksChain) {
  EXPECT_LT(MultiplicationCount(DgtMethod::kDhgf, 64), MultiplicationCount(DgtMethod::kLcc, 64));
  EXPECT_FALSE(ComplexityOrderCheck({64}).ordering_holds_from_64);
}

TEST(ResampleTest, SameGridIsIdentity) {
  const ComplexField g = testing::RandomField(16, 16, 4, 0.3, 0.3);
  EXPECT_LE(MaxAbsDiff(ResampleCentered(g, 16, 0.3), g), 1e-13);
}

TEST(ResampleTest, LinearRampIsInterpolatedExactly) {
  ComplexField g(9, 9, 1.0, 1.0);
  for (int m = 0; m < 9; ++m) {
    for (int n = 0; n < 9; ++n) g.at(m, n) = Complex(m - 4.0, 2.0 * (n - 4.0));
  }
  const ComplexField r = ResampleCentered(g, 12, 0.5);
  for (int m = 0; m < 12; ++m) {
    for (int n = 0; n < 12; ++n) {
      EXPECT_NEAR(std::abs(r.at(m, n) - Complex((m - 6) * 0.5, (n - 6) * 1.0)), 0.0, 1e-14);
    }
  }
  // Zero padding beyond the support.
  EXPECT_EQ(ResampleCentered(g, 30, 1.0).at(0, 0), Complex(0.0, 0.0));
}

TEST(AdditivityTest, CccErrorFallsWithSize) {
  ComplexField host = SyntheticHost(128);
  host.set_intervals(0.1567, 0.1567);
  const std::vector<AdditivityRow> rows =
      CccAdditivityTrend(host, Angle::Degrees(25.0), Angle::Degrees(20.0), {128, 256, 512});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].interval, 0.1567, 1e-4);
  EXPECT_GT(rows[0].nrmse, rows[1].nrmse);
  EXPECT_GT(rows[1].nrmse, rows[2].nrmse);
  EXPECT_GT(rows[2].nrmse, 0.0);
}

TEST(AdditivityTest, ExactAtZeroSecondAngle) {
  const ComplexField g = testing::RandomField(16, 16, 8, 0.6, 0.6);
  EXPECT_LE(CccAdditivityError(g, Angle::Degrees(30.0), Angle()), 1e-15);
}

}  // namespace
}  // namespace gyrator
