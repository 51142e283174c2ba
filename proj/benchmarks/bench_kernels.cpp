// Copyright 2026 The mrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "mrank/construct.hpp"
#include "mrank/minrank.hpp"

using namespace mrank;

namespace {

FMatrix random_symmetric(const FieldPtr& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FMatrix a(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = static_cast<Elem>(rng() % f->q());
  return a;
}

void BM_RankPackedF2(benchmark::State& state) {
  const FMatrix a = random_symmetric(make_field(2), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankPackedF2)->Arg(16)->Arg(64)->Arg(128);

void BM_RankGenericF2(benchmark::State& state) {
  const FMatrix a = random_symmetric(make_field(2), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_generic(a));
}
BENCHMARK(BM_RankGenericF2)->Arg(16)->Arg(64)->Arg(128);

void BM_RankF9(benchmark::State& state) {
  const FMatrix a = random_symmetric(make_field(3, 2), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankF9)->Arg(16)->Arg(64);

void BM_F2Minrank(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(f2_minrank(g).mr);
}
BENCHMARK(BM_F2Minrank)->Arg(12)->Arg(16)->Arg(20);

void BM_CertificateMinrankF3(benchmark::State& state) {
  const Graph g = random_graph(state.range(0), 7);
  const auto f = make_field(3);
  for (auto _ : state) benchmark::DoNotOptimize(certificate_minrank(g, f).mr);
}
BENCHMARK(BM_CertificateMinrankF3)->Arg(8)->Arg(10);

void BM_F3CounterexampleExhaustion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_f3_counterexample(10).stats.nodes);
}
BENCHMARK(BM_F3CounterexampleExhaustion);

}  // namespace

BENCHMARK_MAIN();
