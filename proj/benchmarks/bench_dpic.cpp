#include <benchmark/benchmark.h>

#include "dpic/catalog.hpp"
#include "dpic/k_theory.hpp"
#include "dpic/knitting.hpp"
#include "dpic/mesh_category.hpp"
#include "dpic/translation_quiver.hpp"

namespace {

void BM_KnitE8(benchmark::State& state) {
  const dpic::Quiver q = dpic::dynkin_e(8);
  for (auto _ : state) benchmark::DoNotOptimize(dpic::knit(q));
}
BENCHMARK(BM_KnitE8);

void BM_SigmaNormalFormE8(benchmark::State& state) {
  const dpic::Quiver q = dpic::dynkin_e(8);
  for (auto _ : state) benchmark::DoNotOptimize(dpic::sigma_normal_form(q));
}
BENCHMARK(BM_SigmaNormalFormE8);

void BM_SliceSearchAffineE(benchmark::State& state) {
  const dpic::Quiver q = dpic::affine_e(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpic::aut_commuting_with_tau(q));
}
BENCHMARK(BM_SliceSearchAffineE)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_WeylE6(benchmark::State& state) {
  const dpic::Quiver q = dpic::dynkin_e(6);
  for (auto _ : state) benchmark::DoNotOptimize(dpic::weyl_group(q));
}
BENCHMARK(BM_WeylE6)->Unit(benchmark::kMillisecond);

void BM_HomDimD5(benchmark::State& state) {
  const dpic::Quiver q = dpic::dynkin_d(5);
  const dpic::ZVertex from{0, 0};
  const dpic::ZVertex to{static_cast<int>(state.range(0)), 4};
  for (auto _ : state) benchmark::DoNotOptimize(dpic::hom_dim(q, from, to));
}
BENCHMARK(BM_HomDimD5)->DenseRange(0, 3);

void BM_CoxeterRandomTree(benchmark::State& state) {
  const dpic::Quiver q = dpic::random_tree_orientation(static_cast<std::size_t>(state.range(0)), 7);
  const dpic::Orientation o = dpic::Orientation::from_quiver(q);
  for (auto _ : state) benchmark::DoNotOptimize(dpic::verify_reflection_factorization(o));
}
BENCHMARK(BM_CoxeterRandomTree)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
