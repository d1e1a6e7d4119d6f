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

#ifndef GYRATOR_SRC_PARALLEL_H_
#define GYRATOR_SRC_PARALLEL_H_

#include <functional>

namespace gyrator::internal {

// Worker count: GYRATOR_THREADS if set and positive, otherwise the hardware
// concurrency, never below one.
int ThreadCount();

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each.
// Runs inline when one thread is available or n is small.
void ParallelFor(int n, const std::function<void(int, int)>& fn,
                 int min_chunk = 8);

}  // namespace gyrator::internal

#endif  // GYRATOR_SRC_PARALLEL_H_
