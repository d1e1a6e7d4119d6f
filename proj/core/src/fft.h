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

#ifndef GYRATOR_SRC_FFT_H_
#define GYRATOR_SRC_FFT_H_

#include <vector>

#include "gyrator/field.h"

namespace gyrator::internal {

// Unnormalized in-place DFT. sign -1 is the forward kernel exp(-j...).
void Fft(std::vector<Complex>& data, int sign);

// Unnormalized 2D DFT of a row-major rows x cols buffer.
void Fft2(std::vector<Complex>& data, int rows, int cols, int sign);

// Smallest integer >= n whose prime factors are all in {2, 3, 5, 7}.
int NextSmoothSize(int n);

int NextPowerOfTwo(int n);

}  // namespace gyrator::internal

#endif  // GYRATOR_SRC_FFT_H_
