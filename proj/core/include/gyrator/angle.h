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

#ifndef GYRATOR_ANGLE_H_
#define GYRATOR_ANGLE_H_

namespace gyrator {

// sin(5 degrees).
inline constexpr double kDefaultTau = 0.087155742747658166;

// Rotation angle in radians, normalized to (-pi, pi].
class Angle {
 public:
  constexpr Angle() = default;
  static Angle Radians(double rad);
  // Normalizes in degrees first so that multiples of 180 land exactly on
  // 0 or pi.
  static Angle Degrees(double deg);

  double rad() const { return rad_; }
  double deg() const;

  bool is_zero() const { return rad_ == 0.0; }
  bool is_pi() const;
  bool is_exact_kpi() const { return is_zero() || is_pi(); }

  // |sin a| < tau.
  bool near_kpi(double tau = kDefaultTau) const;
  // |cos(a / 2)| < tau.
  bool near_odd_pi(double tau = kDefaultTau) const;

  Angle operator-() const { return Radians(-rad_); }
  Angle operator+(Angle o) const { return Radians(rad_ + o.rad_); }
  Angle operator-(Angle o) const { return Radians(rad_ - o.rad_); }

 private:
  explicit constexpr Angle(double rad) : rad_(rad) {}
  double rad_ = 0.0;
};

}  // namespace gyrator

#endif  // GYRATOR_ANGLE_H_
