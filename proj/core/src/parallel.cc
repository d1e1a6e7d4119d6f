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

#include "parallel.h"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gyrator::internal {

int ThreadCount() {
  static const int count = [] {
    if (const char* env = std::getenv("GYRATOR_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  }();
  return count;
}

void ParallelFor(int n, const std::function<void(int, int)>& fn,
                 int min_chunk) {
  if (n <= 0) return;
  int workers = std::min(ThreadCount(), std::max(1, n / std::max(1, min_chunk)));
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 1; w < workers; ++w) {
    int b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back(fn, b, e);
  }
  fn(0, std::min(n, chunk));
  for (std::thread& t : threads) t.join();
}

}  // namespace gyrator::internal
