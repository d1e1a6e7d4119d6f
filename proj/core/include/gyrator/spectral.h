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

#ifndef GYRATOR_SPECTRAL_H_
#define GYRATOR_SPECTRAL_H_

#include "gyrator/field.h"

namespace gyrator {

// out(p_c, q_c) = sum g(m_c, n_c) exp(sign * j2pi (p_c m_c / n1 + q_c n_c / n2))
// over centered index ranges, with no normalization. sign must be -1 or +1.
// Output keeps the input intervals; callers set the physical ones.
ComplexField CenteredDft2(const ComplexField& g, int sign);

// exp(j (a m_c^2 + b n_c^2 + c m_c n_c)) on an n1 x n2 centered grid.
ComplexField ChirpGrid(double a, double b, double c, int n1, int n2);

// Full linear convolution of an n1 x n2 field with a (2 n1 - 1) x (2 n2 - 1)
// kernel. The result is (3 n1 - 2) x (3 n2 - 2) and follows the usual
// centered convention: kernel tap a and input sample m_c land on t = m_c + a.
ComplexField LinearConvolve2(const ComplexField& g, const ComplexField& kernel);

// The n1 x n2 block of a (3 n1 - 2) x (3 n2 - 2) field that starts at
// (n1 - 1, n2 - 1).
ComplexField CentralBlock(const ComplexField& full, int n1, int n2);

// Length-n centered 1D DFT of a contiguous vector, unnormalized.
void CenteredDft1(Complex* data, int n, int sign);

}  // namespace gyrator

#endif  // GYRATOR_SPECTRAL_H_
