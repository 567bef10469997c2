#include <benchmark/benchmark.h>

#include "lipext/extenders.hpp"
#include "lipext/partition.hpp"
#include "lipext/transport.hpp"
#include "lipext/whitney.hpp"
#include "lipext_tools/instances.hpp"

using namespace lipext;
using namespace lipext::tools;

static void BM_W1Distance(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  auto target = TargetSpace::normed(2);
  DiscreteMeasure mu(target, random_points(rng, n, 2, 0, 1), random_probability(rng, n));
  DiscreteMeasure nu(target, random_points(rng, n, 2, 0, 1), random_probability(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(w1_distance(mu, nu));
}
BENCHMARK(BM_W1Distance)->Arg(8)->Arg(32)->Arg(128);

static void BM_WhitneyCover(benchmark::State& state) {
  auto inst = planar_instance(5, static_cast<std::size_t>(state.range(0)), 10, 1, 1.0);
  auto oracle = grid_oracle(inst.cloud, inst.f.domain);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_whitney_cover(inst.space, inst.f.domain, kDefaultWhitneyR, oracle));
}
BENCHMARK(BM_WhitneyCover)->Arg(40)->Arg(80);

static void BM_Partition(benchmark::State& state) {
  auto inst = planar_instance(5, static_cast<std::size_t>(state.range(0)), 10, 1, 1.0);
  auto cover = build_whitney_cover(inst.space, inst.f.domain, kDefaultWhitneyR, grid_oracle(inst.cloud, inst.f.domain));
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(inst.space, cover));
}
BENCHMARK(BM_Partition)->Arg(40)->Arg(80);

static void BM_Extend(benchmark::State& state) {
  auto inst = planar_instance(9, 60, 20, 1, 1.0);
  auto oracle = grid_oracle(inst.cloud, inst.f.domain);
  for (auto _ : state) {
    switch (state.range(0)) {
      case 0: benchmark::DoNotOptimize(mcshane_extend(inst.space, inst.f)); break;
      case 1: benchmark::DoNotOptimize(whitney_extend(inst.space, inst.f, oracle)); break;
      default: benchmark::DoNotOptimize(lee_naor_extend(inst.space, inst.f, {.seed = 1, .permutations = 200}));
    }
  }
}
BENCHMARK(BM_Extend)->Arg(0)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
