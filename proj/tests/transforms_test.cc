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
#include <functional>

#include "gtest/gtest.h"
#include "gyrator/error.h"
#include "gyrator/oracle.h"
#include "gyrator/spectral.h"
#include "gyrator/transforms.h"
#include "test_util.h"

namespace gyrator {
namespace {

using testing::RandomField;
using testing::RelErr;

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kUsage;
}

TEST(DgtDirectTest, ExactConventions) {
  ComplexField g = RandomField(5, 4, 1, 0.3, 0.4);
  EXPECT_EQ(MaxAbsDiff(DgtDirect(g, Angle(), 1, 1), g), 0.0);
  EXPECT_EQ(MaxAbsDiff(DgtDirect(g, Angle::Degrees(180), 1, 1), Reflect(g)), 0.0);
}

TEST(DgtDirectTest, NearSingularThrows) {
  ComplexField g = RandomField(4, 4, 1);
  EXPECT_EQ(KindOf([&] { DgtDirect(g, Angle::Degrees(2.0), 1, 1); }),
            ErrorKind::kSingularAngle);
  EXPECT_EQ(KindOf([&] { DgtLcc(g, Angle::Degrees(-178.0), 1, 1); }),
            ErrorKind::kSingularAngle);
  EXPECT_EQ(KindOf([&] { DgtDft(g, Angle::Degrees(4.0)); }), ErrorKind::kSingularAngle);
  EXPECT_EQ(KindOf([&] { DgtCcc(g, Angle::Degrees(177.0)); }), ErrorKind::kSingularAngle);
}

TEST(DgtDirectTest, QuarterTurnIsSwappedDft) {
  const double dx = 0.8, dy = 1.3;
  ComplexField g = RandomField(5, 5, 3, dx, dy);
  const double du = 2 * M_PI / (5 * dy), dv = 2 * M_PI / (5 * dx);
  ComplexField want = Transpose(CenteredDft2(g, -1));
  for (auto& z : want.data()) z *= dx * dy / (2 * M_PI);
  EXPECT_LE(RelErr(DgtDirect(g, Angle::Degrees(90), du, dv), want), 1e-12);
}

TEST(DgtLccTest, MatchesDirect6x6) {
  ComplexField g = RandomField(6, 6, 4);
  const Angle a = Angle::Degrees(60);
  EXPECT_LE(RelErr(LccCentral(DgtLcc(g, a, 1, 1)), DgtDirect(g, a, 1, 1)), 1e-9);
}

TEST(DgtLccTest, RectangularAndUnequalIntervals) {
  ComplexField g = RandomField(5, 8, 5, 0.4, 0.7);
  for (double deg : {20.0, 45.0, 100.0, 160.0, -70.0}) {
    const Angle a = Angle::Degrees(deg);
    ComplexField full = DgtLcc(g, a, 0.35, 0.55);
    EXPECT_EQ(full.n1(), 3 * 8 - 2);
    EXPECT_EQ(full.n2(), 3 * 5 - 2);
    EXPECT_LE(RelErr(LccCentral(full), DgtDirect(g, a, 0.35, 0.55)), 1e-9) << deg;
  }
}

TEST(DgtLccTest, OutputSize256) {
  ComplexField g(256, 256, 0.07, 0.07);
  g.centered(0, 0) = 1.0;
  ComplexField full = DgtLcc(g, Angle::Degrees(60), 0.07, 0.07);
  EXPECT_EQ(full.n1(), 766);
  EXPECT_EQ(full.n2(), 766);
}

TEST(DgtLccTest, InverseRoundtrip) {
  ComplexField g = RandomField(8, 8, 6);
  const Angle a = Angle::Degrees(45);
  ComplexField full = DgtLcc(g, a, 1, 1);
  EXPECT_LE(RelErr(DgtLccInverse(full, a, 8, 8, 1, 1), g), 1e-8);
  ComplexField h = RandomField(6, 9, 7, 0.5, 0.9);
  for (double deg : {20.0, 135.0, -100.0}) {
    const Angle b = Angle::Degrees(deg);
    ComplexField f = DgtLcc(h, b, 0.6, 0.45);
    EXPECT_LE(RelErr(DgtLccInverse(f, b, 6, 9, 0.5, 0.9), h), 1e-8) << deg;
  }
}

TEST(DgtLccTest, NegativeAngleIsNotInverse) {
  ComplexField g = RandomField(8, 8, 8);
  const Angle a = Angle::Degrees(45);
  ComplexField back = LccCentral(DgtLcc(LccCentral(DgtLcc(g, a, 1, 1)), -a, 1, 1));
  EXPECT_GT(RelErr(back, g), 0.01);
}

TEST(DgtLccTest, CentralOnlyInputRejected) {
  ComplexField g = RandomField(8, 8, 9);
  ComplexField central = LccCentral(DgtLcc(g, Angle::Degrees(45), 1, 1));
  EXPECT_EQ(KindOf([&] { DgtLccInverse(central, Angle::Degrees(45), 8, 8, 1, 1); }),
            ErrorKind::kInsufficientData);
}

TEST(DgtDftTest, FixedIntervals) {
  ComplexField g(512, 512, 0.07, 0.07);
  g.centered(0, 0) = 1.0;
  ComplexField f = DgtDft(g, Angle::Degrees(150));
  EXPECT_NEAR(f.dy(), 0.08766, 1e-5);
  EXPECT_NEAR(f.dx(), 2 * M_PI * 0.5 / (512 * 0.07), 1e-15);
}

TEST(DgtDftTest, MatchesDirect) {
  ComplexField g = RandomField(8, 8, 10, 0.9, 0.9);
  const Angle a = Angle::Degrees(100);
  ComplexField f = DgtDft(g, a);
  EXPECT_LE(RelErr(f, DgtDirect(g, a, f.dx(), f.dy())), 1e-9);
  ComplexField h = RandomField(6, 9, 11, 0.5, 1.1);
  for (double deg : {20.0, -45.0, 160.0}) {
    const Angle b = Angle::Degrees(deg);
    ComplexField fh = DgtDft(h, b);
    EXPECT_EQ(fh.n1(), 9);
    EXPECT_LE(RelErr(fh, DgtDirect(h, b, fh.dx(), fh.dy())), 1e-9) << deg;
  }
}

TEST(DgtDftTest, ParsevalAndReversibility) {
  ComplexField g = RandomField(9, 12, 12, 0.3, 0.6);
  for (double deg : {30.0, 100.0, -140.0}) {
    const Angle a = Angle::Degrees(deg);
    ComplexField f = DgtDft(g, a);
    EXPECT_NEAR(f.energy() * f.dx() * f.dy() / (g.energy() * g.dx() * g.dy()), 1.0, 1e-9);
    ComplexField back = DgtDft(f, -a);
    EXPECT_NEAR(back.dx(), g.dx(), 1e-15);
    EXPECT_LE(RelErr(back, g), 1e-9) << deg;
  }
}

TEST(DgtCccTest, IdentityEnergyReversibility) {
  ComplexField g = RandomField(10, 7, 13, 0.4, 0.2);
  EXPECT_LE(RelErr(DgtCcc(g, Angle()), g), 1e-10);
  for (double deg : {25.0, 90.0, -120.0, 170.0 - 10.0}) {
    const Angle a = Angle::Degrees(deg);
    ComplexField f = DgtCcc(g, a);
    EXPECT_EQ(f.dx(), g.dx());
    EXPECT_NEAR(f.energy() / g.energy(), 1.0, 1e-9);
    EXPECT_LE(RelErr(DgtCcc(f, -a), g), 1e-9) << deg;
  }
}

TEST(OracleEquivalenceTest, LccAndDftMatchDirect) {
  for (int trial = 0; trial < 3; ++trial) {
    ComplexField g = RandomField(8, 8, 100 + trial, 0.5, 0.5);
    for (double deg : {20.0, 45.0, 100.0, 160.0}) {
      const Angle a = Angle::Degrees(deg);
      EXPECT_LE(RelErr(LccCentral(DgtLcc(g, a, 0.5, 0.5)), DgtDirect(g, a, 0.5, 0.5)), 1e-9);
      ComplexField f = DgtDft(g, a);
      EXPECT_LE(RelErr(f, DgtDirect(g, a, f.dx(), f.dy())), 1e-9);
    }
  }
}

TEST(DispatchTest, ExactAngles) {
  ComplexField g = RandomField(6, 6, 14);
  for (DgtMethod m : {DgtMethod::kCcc, DgtMethod::kLcc, DgtMethod::kDft, DgtMethod::kDirect}) {
    EXPECT_LE(RelErr(Dgt(g, Angle::Degrees(180), m), Reflect(g)), 1e-10) << MethodName(m);
    EXPECT_LE(RelErr(Dgt(g, Angle(), m), g), 1e-10) << MethodName(m);
  }
}

TEST(DispatchTest, CccNearPiUsesReflection) {
  ComplexField g = RandomField(8, 8, 15);
  ComplexField got = Dgt(g, Angle::Degrees(150), DgtMethod::kCcc,
                         {.dispatch = {.fold = true}});
  EXPECT_LE(RelErr(got, DgtCcc(Reflect(g), Angle::Degrees(-30))), 1e-12);
  EXPECT_TRUE(NeedsDispatch(Angle::Degrees(178), DgtMethod::kCcc, {}));
  EXPECT_FALSE(NeedsDispatch(Angle::Degrees(150), DgtMethod::kCcc, {}));
  EXPECT_TRUE(NeedsDispatch(Angle::Degrees(150), DgtMethod::kCcc, {.fold = true}));
}

TEST(DispatchTest, NearZeroIsTotal) {
  ComplexField g = RandomField(8, 8, 16, 0.7, 0.7);
  for (DgtMethod m : {DgtMethod::kLcc, DgtMethod::kDirect, DgtMethod::kCcc}) {
    EXPECT_TRUE(Dgt(g, Angle::Degrees(2.0), m).all_finite()) << MethodName(m);
    EXPECT_TRUE(Dgt(g, Angle::Degrees(-179.0), m).all_finite()) << MethodName(m);
  }
  ComplexField f = Dgt(g, Angle::Degrees(2.0), DgtMethod::kDft);
  EXPECT_NEAR(f.energy() * f.dx() * f.dy() / (g.energy() * g.dx() * g.dy()), 1.0, 1e-9);
}

TEST(DispatchTest, DftRouteUsesShiftedIntervals) {
  ComplexField g = RandomField(8, 8, 17, 0.7, 0.7);
  ComplexField f = Dgt(g, Angle::Degrees(3.0), DgtMethod::kDft);
  const double s = std::abs(std::sin(Angle::Degrees(3.0 - 90.0).rad()));
  EXPECT_NEAR(f.dx(), s * 0.7, 1e-12);
  EXPECT_NEAR(f.dy(), s * 0.7, 1e-12);
}

TEST(DispatchTest, DftRejectsIntervals) {
  ComplexField g = RandomField(4, 4, 18);
  EXPECT_EQ(KindOf([&] { Dgt(g, Angle::Degrees(40), DgtMethod::kDft, {.du = 0.5}); }),
            ErrorKind::kUsage);
}

// At 15 degrees the direct sum with input-sized output intervals aliases
// its cot chirp, so the dispatched route is checked against the continuous
// transform instead. The two discretizations differ by O(1).
TEST(DispatchTest, LccFifteenDegreesMatchesContinuous) {
  const int n = 32;
  const double d = std::sqrt(2 * M_PI / n);
  ComplexField g = ScaledGaussian(1.0, Grid{n, n, d, d, false});
  const Angle a = Angle::Degrees(15);
  ComplexField got = Dgt(g, a, DgtMethod::kLcc, {.dispatch = {.fold = true}});
  ComplexField want = GaussianGyratorClosedForm(1.0, a, GridOf(got));
  EXPECT_LE(RelErr(got, want), 1e-6);
  EXPECT_GT(RelErr(DgtDirect(g, a, d, d), want), 1.0);
}

TEST(DispatchTest, DhgfExactAngles) {
  ComplexField g = RandomField(8, 8, 19);
  EXPECT_EQ(MaxAbsDiff(Dgt(g, Angle(), DgtMethod::kDhgf), g), 0.0);
  const ComplexField flipped = Dgt(g, Angle::Degrees(180), DgtMethod::kDhgf);
  EXPECT_EQ(flipped.at(0, 0), g.at(7, 7));
  EXPECT_LE(RelErr(Dgt(g, Angle::Degrees(179.999999), DgtMethod::kDhgf), flipped), 1e-6);
}

TEST(MethodNameTest, ParseRoundtrip) {
  for (DgtMethod m : {DgtMethod::kDirect, DgtMethod::kLcc, DgtMethod::kDft, DgtMethod::kCcc,
                      DgtMethod::kDhgf}) {
    EXPECT_EQ(ParseMethod(MethodName(m)), m);
  }
  EXPECT_EQ(KindOf([] { ParseMethod("fft"); }), ErrorKind::kUsage);
}

}  // namespace
}  // namespace gyrator
