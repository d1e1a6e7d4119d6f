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

#include "gyrator/field.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "gyrator/error.h"

namespace gyrator {

namespace {

void CheckSameShape(const ComplexField& g, const ComplexField& h) {
  if (g.n1() != h.n1() || g.n2() != h.n2()) {
    Fail(ErrorKind::kShape, "dimension mismatch " + std::to_string(g.n1()) +
                                "x" + std::to_string(g.n2()) + " vs " +
                                std::to_string(h.n1()) + "x" +
                                std::to_string(h.n2()));
  }
}

}  // namespace

ComplexField::ComplexField(int n1, int n2, double dx, double dy)
    : ComplexField(n1, n2, dx, dy,
                   std::vector<Complex>(static_cast<size_t>(n1) * n2)) {}

ComplexField::ComplexField(int n1, int n2, double dx, double dy,
                           std::vector<Complex> data)
    : n1_(n1), n2_(n2), data_(std::move(data)) {
  if (n1 <= 0 || n2 <= 0) {
    Fail(ErrorKind::kShape, "grid sizes must be positive");
  }
  if (data_.size() != static_cast<size_t>(n1) * n2) {
    Fail(ErrorKind::kShape, "data length does not match n1*n2");
  }
  set_intervals(dx, dy);
}

void ComplexField::set_intervals(double dx, double dy) {
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    Fail(ErrorKind::kRange, "sampling intervals must be positive and finite");
  }
  dx_ = dx;
  dy_ = dy;
}

double ComplexField::energy() const {
  double e = 0.0;
  for (const Complex& v : data_) e += std::norm(v);
  return e;
}

bool ComplexField::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexField Transpose(const ComplexField& g) {
  ComplexField out(g.n2(), g.n1(), g.dy(), g.dx());
  for (int m = 0; m < g.n1(); ++m) {
    for (int n = 0; n < g.n2(); ++n) out.at(n, m) = g.at(m, n);
  }
  return out;
}

ComplexField Reflect(const ComplexField& g) {
  ComplexField out(g.n1(), g.n2(), g.dx(), g.dy());
  const int o1 = g.m_offset(), o2 = g.n_offset();
  for (int m = 0; m < g.n1(); ++m) {
    int mc = m - o1;
    int rm = -mc + o1;
    if (rm >= g.n1()) rm = m;  // unpaired -N/2 maps to itself
    for (int n = 0; n < g.n2(); ++n) {
      int nc = n - o2;
      int rn = -nc + o2;
      if (rn >= g.n2()) rn = n;
      out.at(m, n) = g.at(rm, rn);
    }
  }
  return out;
}

ComplexField Conj(const ComplexField& g) {
  ComplexField out = g;
  for (Complex& v : out.data()) v = std::conj(v);
  return out;
}

double Nrmse(const ComplexField& g, const ComplexField& h) {
  CheckSameShape(g, h);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < g.size(); ++i) {
    num += std::norm(g.data()[i] - h.data()[i]);
    den += std::norm(g.data()[i]);
  }
  if (den == 0.0) {
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::sqrt(num / den);
}

double Psnr(const ComplexField& reference, const ComplexField& test,
            double peak) {
  CheckSameShape(reference, test);
  double mse = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    double d = reference.data()[i].real() - test.data()[i].real();
    mse += d * d;
  }
  mse /= static_cast<double>(reference.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

double MaxAbsDiff(const ComplexField& g, const ComplexField& h) {
  CheckSameShape(g, h);
  double m = 0.0;
  for (size_t i = 0; i < g.size(); ++i) {
    m = std::max(m, std::abs(g.data()[i] - h.data()[i]));
  }
  return m;
}

ComplexField PadCentered(const ComplexField& g, int n1, int n2) {
  ComplexField out(n1, n2, g.dx(), g.dy());
  for (int m = 0; m < g.n1(); ++m) {
    int om = m - g.m_offset() + out.m_offset();
    if (om < 0 || om >= n1) continue;
    for (int n = 0; n < g.n2(); ++n) {
      int on = n - g.n_offset() + out.n_offset();
      if (on < 0 || on >= n2) continue;
      out.at(om, on) = g.at(m, n);
    }
  }
  return out;
}

}  // namespace gyrator
