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

// Wall clock of the four fast DGTs on N x N inputs. The real multiplication
// count of each method is reported as a counter next to the time.
//
// Set GYRATOR_THREADS=1 for numbers comparable with the counts.

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "benchmark/benchmark.h"
#include "gyrator/apps.h"
#include "gyrator/hgf.h"
#include "gyrator/oracle.h"
#include "gyrator/transforms.h"

namespace {

using gyrator::Angle;
using gyrator::ComplexField;
using gyrator::DgtMethod;

ComplexField RandomInput(int n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> dist;
  const double d = std::sqrt(2.0 * M_PI / n);
  ComplexField g(n, n, d, d);
  for (auto& v : g.data()) v = {dist(rng), dist(rng)};
  return g;
}

void BenchmarkDgt(benchmark::State& state, DgtMethod method) {
  const int n = static_cast<int>(state.range(0));
  const ComplexField g = RandomInput(n);
  const Angle alpha = Angle::Degrees(60.0);
  // Basis construction is a one-off cost per size.
  if (method == DgtMethod::kDhgf) gyrator::CachedHgfBasis(n);
  for (auto _ : state) {
    ComplexField out = gyrator::Dgt(g, alpha, method);
    benchmark::DoNotOptimize(out.ptr());
  }
  state.counters["mults"] = gyrator::MultiplicationCount(method, n);
}

void BM_DgtDft(benchmark::State& state) { BenchmarkDgt(state, DgtMethod::kDft); }
BENCHMARK(BM_DgtDft)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_DgtCcc(benchmark::State& state) { BenchmarkDgt(state, DgtMethod::kCcc); }
BENCHMARK(BM_DgtCcc)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_DgtLcc(benchmark::State& state) { BenchmarkDgt(state, DgtMethod::kLcc); }
BENCHMARK(BM_DgtLcc)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_DgtDhgf(benchmark::State& state) { BenchmarkDgt(state, DgtMethod::kDhgf); }
BENCHMARK(BM_DgtDhgf)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_DgtDirect(benchmark::State& state) { BenchmarkDgt(state, DgtMethod::kDirect); }
BENCHMARK(BM_DgtDirect)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DiscreteHgfBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gyrator::HgfBasis h = gyrator::DiscreteHgfBasis(n);
    benchmark::DoNotOptimize(h.matrix().data());
  }
}
BENCHMARK(BM_DiscreteHgfBasis)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_WatermarkDetect1000(benchmark::State& state) {
  const ComplexField host = gyrator::SyntheticHost(256);
  const auto w1 = gyrator::WatermarkPattern(64, 0), w2 = gyrator::WatermarkPattern(64, 1);
  gyrator::WatermarkKey key;
  const ComplexField wm = gyrator::WatermarkEmbed(host, w1, w2, key);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> u(0, 255);
  std::vector<std::pair<std::vector<double>, std::vector<double>>> cands(
      1000, {std::vector<double>(4096), std::vector<double>(4096)});
  for (auto& [a, b] : cands) {
    for (double& v : a) v = u(rng);
    for (double& v : b) v = u(rng);
  }
  for (auto _ : state) {
    auto r = gyrator::NormalizedResponses(wm, cands, key);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_WatermarkDetect1000)->Unit(benchmark::kMillisecond);

void BM_EncryptDecrypt256(benchmark::State& state) {
  const ComplexField img = gyrator::SyntheticHost(256);
  gyrator::CryptoKey key;
  key.x0 = gyrator::DeriveSeeds(16, 7);
  for (auto _ : state) {
    const gyrator::EncryptedImage enc = gyrator::Encrypt(img, key);
    ComplexField out = gyrator::Decrypt(enc.image, enc.meta, key);
    benchmark::DoNotOptimize(out.ptr());
  }
}
BENCHMARK(BM_EncryptDecrypt256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
