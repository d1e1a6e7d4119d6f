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

#ifndef GYRATOR_FIELD_H_
#define GYRATOR_FIELD_H_

#include <complex>
#include <cstddef>
#include <vector>

namespace gyrator {

using Complex = std::complex<double>;

// A rectangular grid of complex samples. Element (m, n) lives at m * n2 + n
// and sits at the physical point (m_c * dx, n_c * dy) where
// m_c = m - floor(n1 / 2) and n_c = n - floor(n2 / 2).
class ComplexField {
 public:
  ComplexField() = default;
  ComplexField(int n1, int n2, double dx = 1.0, double dy = 1.0);
  ComplexField(int n1, int n2, double dx, double dy, std::vector<Complex> data);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  void set_intervals(double dx, double dy);

  Complex& at(int m, int n) { return data_[static_cast<size_t>(m) * n2_ + n]; }
  const Complex& at(int m, int n) const {
    return data_[static_cast<size_t>(m) * n2_ + n];
  }
  // Access by centered indices.
  Complex& centered(int mc, int nc) { return at(mc + n1_ / 2, nc + n2_ / 2); }
  const Complex& centered(int mc, int nc) const {
    return at(mc + n1_ / 2, nc + n2_ / 2);
  }

  int m_offset() const { return n1_ / 2; }
  int n_offset() const { return n2_ / 2; }

  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }
  Complex* ptr() { return data_.data(); }
  const Complex* ptr() const { return data_.data(); }

  double energy() const;
  bool all_finite() const;

 private:
  int n1_ = 0;
  int n2_ = 0;
  double dx_ = 1.0;
  double dy_ = 1.0;
  std::vector<Complex> data_;
};

// Swaps the axes; intervals follow their axes.
ComplexField Transpose(const ComplexField& g);

// out(m_c, n_c) = in(-m_c, -n_c). For even sizes the index -N/2 has no
// partner inside the grid and maps to itself.
ComplexField Reflect(const ComplexField& g);

ComplexField Conj(const ComplexField& g);

// sqrt(sum |g - h|^2) / sqrt(sum |g|^2). Returns +inf when g is zero and h
// is not, 0 when both are zero.
double Nrmse(const ComplexField& g, const ComplexField& h);

// Peak signal-to-noise ratio in dB of the real parts against a reference.
double Psnr(const ComplexField& reference, const ComplexField& test,
            double peak = 255.0);

double MaxAbsDiff(const ComplexField& g, const ComplexField& h);

// Zero-pads (or crops) symmetrically about the centered origin.
ComplexField PadCentered(const ComplexField& g, int n1, int n2);

}  // namespace gyrator

#endif  // GYRATOR_FIELD_H_
