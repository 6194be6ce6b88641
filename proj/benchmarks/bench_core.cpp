#include <benchmark/benchmark.h>

#include "trideg/exactla.hpp"
#include "trideg/grothendieck.hpp"
#include "trideg/instances.hpp"

using namespace trideg;

namespace {

std::vector<Complex> sample_complexes(std::uint32_t p, std::size_t count) {
  instances::Rng rng(7);
  auto alg = instances::a3(p, false);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(instances::random_complex(alg, rng));
  return out;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::uint32_t> e(n * n);
  for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
  const la::Matrix m(n, n, 3, e);
  for (auto _ : state) benchmark::DoNotOptimize(la::rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64)->Arg(128);

void BM_Cone(benchmark::State& state) {
  const auto xs = sample_complexes(2, 16);
  instances::Rng rng(2);
  std::vector<ChainMap> maps;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) maps.push_back(instances::random_chain_map(xs[i], xs[i + 1], rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cone(maps[k++ % maps.size()]));
}
BENCHMARK(BM_Cone);

void BM_IsNullhomotopic(benchmark::State& state) {
  const auto xs = sample_complexes(3, 16);
  instances::Rng rng(3);
  std::vector<ChainMap> maps;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) maps.push_back(instances::random_chain_map(xs[i], xs[i + 1], rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_nullhomotopic(maps[k++ % maps.size()]));
}
BENCHMARK(BM_IsNullhomotopic);

void BM_HomologyDims(benchmark::State& state) {
  const auto xs = sample_complexes(2, 16);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(xs[k++ % xs.size()]));
}
BENCHMARK(BM_HomologyDims);

void BM_LeftWitness(benchmark::State& state) {
  instances::Rng rng(4);
  auto alg = instances::a2(2);
  for (auto _ : state) benchmark::DoNotOptimize(instances::random_left_witness(alg, rng));
}
BENCHMARK(BM_LeftWitness);

void BM_DegPullback(benchmark::State& state) {
  instances::Rng rng(5);
  auto alg = instances::a3(2, true);
  for (auto _ : state) benchmark::DoNotOptimize(instances::random_deg(alg, rng));
}
BENCHMARK(BM_DegPullback);

void BM_ConeZero(benchmark::State& state) {
  const auto xs = sample_complexes(2, 8);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cone_zero(xs[k++ % xs.size()]));
}
BENCHMARK(BM_ConeZero);

void BM_TheoremComparison(benchmark::State& state) {
  instances::Rng rng(6);
  auto alg = instances::a3(2, true);
  std::vector<DegenerationWitness> ws;
  for (int i = 0; i < 8; ++i) ws.push_back(instances::random_left_witness(alg, rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(theorem_cone_comparison(ws[k++ % ws.size()]));
}
BENCHMARK(BM_TheoremComparison);

void BM_PairDecompose(benchmark::State& state) {
  instances::Rng rng(8);
  std::vector<ShiftSum> sums;
  for (int i = 0; i < 32; ++i) sums.push_back(instances::random_zero_class(rng, 8));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pair_decompose(sums[k++ % sums.size()]));
}
BENCHMARK(BM_PairDecompose);

void BM_TowerNilChain(benchmark::State& state) {
  instances::Rng rng(9);
  auto alg = instances::a2(2);
  const Tower t = instances::random_tower(alg, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tower_nil_chain(t));
}
BENCHMARK(BM_TowerNilChain)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
