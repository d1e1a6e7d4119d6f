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
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "gyrator/abcd.h"
#include "gyrator/angle.h"
#include "gyrator/error.h"
#include "gyrator/field.h"
#include "test_util.h"

namespace gyrator {
namespace {

using testing::RandomField;

TEST(NrmseTest, HandValues) {
  ComplexField g(1, 2, 1, 1, {1.0, 0.0});
  ComplexField z(1, 2);
  EXPECT_DOUBLE_EQ(Nrmse(g, z), 1.0);
  ComplexField a(1, 2, 1, 1, {3.0, 4.0});
  ComplexField b(1, 2, 1, 1, {3.0, 0.0});
  EXPECT_NEAR(Nrmse(a, b), 0.8, 1e-15);
  EXPECT_EQ(Nrmse(a, a), 0.0);
}

TEST(NrmseTest, ZeroReference) {
  ComplexField z(2, 2);
  ComplexField one(2, 2);
  one.at(0, 0) = 1.0;
  EXPECT_TRUE(std::isinf(Nrmse(z, one)));
  EXPECT_EQ(Nrmse(z, z), 0.0);
}

TEST(NrmseTest, ScaleCovariant) {
  ComplexField g = RandomField(5, 4, 1), h = RandomField(5, 4, 2);
  const Complex c(-2.5, 0.75);
  ComplexField cg = g, ch = h;
  for (auto& z : cg.data()) z *= c;
  for (auto& z : ch.data()) z *= c;
  EXPECT_NEAR(Nrmse(cg, ch), Nrmse(g, h), 1e-13);
}

TEST(NrmseTest, ShapeMismatchThrows) {
  try {
    Nrmse(ComplexField(2, 3), ComplexField(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShape);
  }
}

TEST(FieldTest, RejectsBadIntervals) {
  EXPECT_THROW(ComplexField(2, 2, 0.0, 1.0), Error);
  EXPECT_THROW(ComplexField(2, 2, 1.0, -1.0), Error);
  EXPECT_THROW(ComplexField(0, 2), Error);
}

TEST(FieldTest, CenteredIndexing) {
  ComplexField f(5, 4);
  EXPECT_EQ(f.m_offset(), 2);
  EXPECT_EQ(f.n_offset(), 2);
  f.centered(-2, -2) = 7.0;
  EXPECT_EQ(f.at(0, 0), Complex(7.0));
}

TEST(ReflectTest, DeltaOddGrid) {
  ComplexField f(5, 5);
  f.centered(1, 0) = 1.0;
  ComplexField r = Reflect(f);
  EXPECT_EQ(r.centered(-1, 0), Complex(1.0));
  EXPECT_EQ(r.centered(1, 0), Complex(0.0));
}

TEST(ReflectTest, SymmetricFieldUnchanged) {
  ComplexField f(5, 3);
  for (int m = -2; m <= 2; ++m)
    for (int n = -1; n <= 1; ++n) f.centered(m, n) = Complex(m * m + n * n, m * n);
  EXPECT_EQ(MaxAbsDiff(Reflect(f), f), 0.0);
}

TEST(ReflectTest, InvolutionOdd) {
  ComplexField g = RandomField(7, 5, 3);
  EXPECT_EQ(MaxAbsDiff(Reflect(Reflect(g)), g), 0.0);
}

TEST(ReflectTest, EvenUnpairedIndexStays) {
  ComplexField f(4, 4);
  f.centered(-2, -2) = 1.0;
  f.centered(-2, 1) = 2.0;
  ComplexField r = Reflect(f);
  EXPECT_EQ(r.centered(-2, -2), Complex(1.0));
  EXPECT_EQ(r.centered(-2, -1), Complex(2.0));
}

TEST(TransposeTest, SwapsIntervals) {
  ComplexField g = RandomField(3, 5, 4, 0.5, 2.0);
  ComplexField t = Transpose(g);
  EXPECT_EQ(t.n1(), 5);
  EXPECT_EQ(t.n2(), 3);
  EXPECT_EQ(t.dx(), 2.0);
  EXPECT_EQ(t.at(4, 1), g.at(1, 4));
}

TEST(PsnrTest, KnownValue) {
  ComplexField a(1, 4, 1, 1, {0.0, 0.0, 0.0, 0.0});
  ComplexField b(1, 4, 1, 1, {1.0, 1.0, 1.0, 1.0});
  EXPECT_NEAR(Psnr(a, b), 20.0 * std::log10(255.0), 1e-12);
}

TEST(AngleTest, Normalization) {
  EXPECT_EQ(Angle::Degrees(180.0).rad(), M_PI);
  EXPECT_EQ(Angle::Degrees(-180.0).rad(), M_PI);
  EXPECT_EQ(Angle::Degrees(360.0).rad(), 0.0);
  EXPECT_NEAR(Angle::Degrees(270.0).deg(), -90.0, 1e-12);
  const Angle a = Angle::Radians(5.0);
  EXPECT_EQ(Angle::Radians(a.rad()).rad(), a.rad());
}

TEST(AngleTest, Classification) {
  EXPECT_TRUE(Angle::Degrees(3.0).near_kpi());
  EXPECT_FALSE(Angle::Degrees(6.0).near_kpi());
  EXPECT_TRUE(Angle::Degrees(176.0).near_kpi());
  EXPECT_TRUE(Angle::Degrees(176.0).near_odd_pi());
  EXPECT_FALSE(Angle::Degrees(4.0).near_odd_pi());
  EXPECT_TRUE(Angle::Degrees(10.0).near_kpi(0.2));
  EXPECT_TRUE(Angle::Degrees(180.0).is_exact_kpi());
  EXPECT_NEAR(kDefaultTau, std::sin(M_PI / 36.0), 1e-17);
}

TEST(AbcdTest, GyratorSpecialAngles) {
  EXPECT_EQ(MaxAbsDiff(GyratorMatrix(Angle()), AbcdMatrix::Identity()), 0.0);
  const AbcdMatrix m = GyratorMatrix(Angle::Degrees(90.0));
  const AbcdMatrix::Storage want = {0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0};
  for (int i = 0; i < 16; ++i) EXPECT_NEAR(m.values()[i], want[i], 1e-15);
}

TEST(AbcdTest, RandomAnglesAreSymplectic) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const AbcdMatrix m = GyratorMatrix(Angle::Radians(u(rng)));
    EXPECT_LE(AbcdMatrix::SymplecticResidual(m.values()), 1e-12);
  }
}

TEST(AbcdTest, ComposeAddsAngles) {
  const Angle a = Angle::Degrees(37.0), b = Angle::Degrees(-112.0);
  EXPECT_LE(MaxAbsDiff(Compose(GyratorMatrix(a), GyratorMatrix(b)), GyratorMatrix(a + b)),
            1e-12);
  const AbcdMatrix m = GyratorMatrix(a);
  EXPECT_LE(MaxAbsDiff(Compose(m, AbcdMatrix::Identity()), m), 0.0);
}

TEST(AbcdTest, ComposeAssociative) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  for (int i = 0; i < 50; ++i) {
    const AbcdMatrix x = GyratorMatrix(Angle::Radians(u(rng)));
    const AbcdMatrix y = ChirpMultiplicationMatrix(Angle::Radians(0.3 + 0.1 * i));
    const AbcdMatrix z = GyratorMatrix(Angle::Radians(u(rng)));
    EXPECT_LE(MaxAbsDiff(Compose(Compose(x, y), z), Compose(x, Compose(y, z))), 1e-12);
  }
}

TEST(AbcdTest, FourFactorDecomposition) {
  const Angle a = Angle::Degrees(60.0);
  const AbcdMatrix chirp = ChirpMultiplicationMatrix(a);
  const AbcdMatrix product =
      Compose(Compose(Compose(chirp, AxisSwapMatrix()), ChirpConvolutionMatrix(a)), chirp);
  EXPECT_LE(MaxAbsDiff(product, GyratorMatrix(a)), 1e-12);
}

TEST(AbcdTest, RejectsNonSymplectic) {
  AbcdMatrix::Storage bad = AbcdMatrix::Identity().values();
  bad[0] = 2.0;
  try {
    AbcdMatrix m(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  }
}

}  // namespace
}  // namespace gyrator
