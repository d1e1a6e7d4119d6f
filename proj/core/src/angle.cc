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

#include "gyrator/angle.h"

#include <cmath>

namespace gyrator {

Angle Angle::Radians(double rad) {
  double r = std::remainder(rad, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  if (r > M_PI) r -= 2.0 * M_PI;
  return Angle(r);
}

Angle Angle::Degrees(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  if (d == 180.0) return Angle(M_PI);
  if (d == 0.0) return Angle(0.0);
  return Radians(d * M_PI / 180.0);
}

double Angle::deg() const { return is_pi() ? 180.0 : rad_ * 180.0 / M_PI; }

bool Angle::is_pi() const { return rad_ == M_PI; }

bool Angle::near_kpi(double tau) const { return std::abs(std::sin(rad_)) < tau; }

bool Angle::near_odd_pi(double tau) const {
  return std::abs(std::cos(rad_ / 2.0)) < tau;
}

}  // namespace gyrator
