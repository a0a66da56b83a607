// SPDX-License-Identifier: Apache-2.0
//
// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "repairlab/compose.hpp"
#include "repairlab/linalg.hpp"
#include "repairlab/prime_field.hpp"
#include "repairlab/repair_verify.hpp"
#include "repairlab/rng.hpp"
#include "repairlab/smallsub.hpp"

using namespace repairlab;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix<F> m(n, n);
  for (auto& x : m.data()) x = f.random(rng);
  return m;
}

void BM_RankParallel(benchmark::State& state) {
  const PrimeField f(65521);
  const auto m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(f, m));
}

void BM_RankReference(benchmark::State& state) {
  const PrimeField f(65521);
  const auto m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank_reference(f, m));
}

void BM_RankExtParallel(benchmark::State& state) {
  const auto code = build_smallsub(9, 6, 2);
  const auto m = random_matrix(code.field(), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(code.field(), m));
}

void BM_RankExtReference(benchmark::State& state) {
  const auto code = build_smallsub(9, 6, 2);
  const auto m = random_matrix(code.field(), static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rank_reference(code.field(), m));
}

const ComposedCode<PrimeField>& composed_b() {
  static const auto c = compose_yb(5, 3, reed_solomon_outer(5, 4, 2));
  return c;
}

void BM_MdsParallel(benchmark::State& state) {
  const auto& c = composed_b();
  for (auto _ : state) benchmark::DoNotOptimize(check_mds(c.field, c.pcm).mds);
}

void BM_MdsSerial(benchmark::State& state) {
  const auto& c = composed_b();
  for (auto _ : state) benchmark::DoNotOptimize(check_mds_serial(c.field, c.pcm).mds);
}

}  // namespace

BENCHMARK(BM_RankParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_RankReference)->Arg(64)->Arg(256);
BENCHMARK(BM_RankExtParallel)->Arg(32)->Arg(96);
BENCHMARK(BM_RankExtReference)->Arg(32)->Arg(96);
BENCHMARK(BM_MdsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MdsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
