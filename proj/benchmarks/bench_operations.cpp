#include <benchmark/benchmark.h>

#include <bracealg/bracealg.hpp>

#include "bracealg_cli/generate.hpp"

namespace {

using namespace bracealg;
using bracealg::cli::SplitMix64;

SpacePtr space_of(int dim) {
  SplitMix64 rng(static_cast<std::uint64_t>(dim));
  return cli::random_space(rng, dim, -2, 2);
}

void BM_Brace(benchmark::State& state) {
  const auto v = space_of(static_cast<int>(state.range(0)));
  SplitMix64 rng(1);
  const auto f = cli::random_map(rng, v, 3);
  const std::vector<MultiMap> gs{cli::random_map(rng, v, 2), cli::random_map(rng, v, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(brace(f, gs));
}
BENCHMARK(BM_Brace)->DenseRange(1, 3);

void BM_Antisymmetrize(benchmark::State& state) {
  const auto v = space_of(2);
  SplitMix64 rng(2);
  const auto f = cli::random_map(rng, v, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(antisymmetrize(f));
}
BENCHMARK(BM_Antisymmetrize)->DenseRange(2, 5);

void BM_SymmetricBrace(benchmark::State& state) {
  const auto v = space_of(static_cast<int>(state.range(0)));
  SplitMix64 rng(3);
  const auto f = antisymmetrize(cli::random_map(rng, v, 3));
  const std::vector<MultiMap> gs{antisymmetrize(cli::random_map(rng, v, 2)),
                                 antisymmetrize(cli::random_map(rng, v, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_brace(f, gs));
}
BENCHMARK(BM_SymmetricBrace)->DenseRange(1, 3);

void BM_BraceAxiom(benchmark::State& state) {
  const auto v = space_of(2);
  SplitMix64 rng(4);
  const auto x = cli::random_map(rng, v, 3);
  const std::vector<MultiMap> xs{cli::random_map(rng, v, 2)};
  const std::vector<MultiMap> ys{cli::random_map(rng, v, 2), cli::random_map(rng, v, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(check_brace_axiom(x, xs, ys));
}
BENCHMARK(BM_BraceAxiom);

}  // namespace

BENCHMARK_MAIN();
