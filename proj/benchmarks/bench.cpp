// Microbenchmarks for the hot paths: convolution, ideal closure, unit
// enumeration, endomorphism enumeration, the full check, and refutation.

#include <random>

#include <benchmark/benchmark.h>

#include "fuchs/endos.hpp"
#include "fuchs/engine.hpp"
#include "fuchs/groupring.hpp"
#include "fuchs/groups.hpp"

using namespace fuchs;
using groupring::RingElem;
using groups::GroupPtr;

namespace {

RingElem random_elem(std::mt19937& rng, const GroupPtr& g) {
  RingElem u = RingElem::zero(g);
  for (int i = 0; i < g->order(); ++i)
    if (rng() & 1) u.coeffs.set(static_cast<std::size_t>(i));
  return u;
}

}  // namespace

static void BM_RingMul(benchmark::State& state) {
  GroupPtr g = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::YQ_C6));
  std::mt19937 rng(1);
  RingElem u = random_elem(rng, g), v = random_elem(rng, g);
  for (auto _ : state) benchmark::DoNotOptimize(groupring::ring_mul(u, v));
}
BENCHMARK(BM_RingMul);

static void BM_IdealClosure_A4(benchmark::State& state) {
  groups::GroupAction act = groups::module_action(groups::ModuleKind::Y_C3);
  GroupPtr g = groups::semidirect_product(act);
  auto gens = engine::sdp_c3_ideal(g, act, {2u, 3u});
  for (auto _ : state)
    benchmark::DoNotOptimize(groupring::ideal_closure(g, gens));
}
BENCHMARK(BM_IdealClosure_A4);

static void BM_IdealClosure_96(benchmark::State& state) {
  groups::GroupAction act = groups::module_action(groups::ModuleKind::YQ_C6);
  GroupPtr g = groups::semidirect_product(act);
  auto gens = engine::c6_ideal(g, act);
  for (auto _ : state)
    benchmark::DoNotOptimize(groupring::ideal_closure(g, gens));
}
BENCHMARK(BM_IdealClosure_96);

static void BM_UnitGroup_SG16(benchmark::State& state) {
  groups::GroupAction act = groups::module_action(groups::ModuleKind::Q_C4);
  GroupPtr g = groups::semidirect_product(act);
  auto q = groupring::quotient(
      groupring::ideal_closure(g, engine::sdp_c4_ideal(g, act, {2u})));
  for (auto _ : state) benchmark::DoNotOptimize(groupring::unit_group(q));
}
BENCHMARK(BM_UnitGroup_SG16);

static void BM_EnumerateEndos_A4(benchmark::State& state) {
  GroupPtr g = groups::semidirect_product(
      groups::module_action(groups::ModuleKind::Y_C3));
  for (auto _ : state) benchmark::DoNotOptimize(endos::enumerate_endos(g));
}
BENCHMARK(BM_EnumerateEndos_A4);

static void BM_CheckFull_A4(benchmark::State& state) {
  groups::GroupAction act = groups::module_action(groups::ModuleKind::Y_C3);
  GroupPtr g = groups::semidirect_product(act);
  auto gens = engine::sdp_c3_ideal(g, act, {2u, 3u});
  for (auto _ : state)
    benchmark::DoNotOptimize(engine::check_full(g, gens));
}
BENCHMARK(BM_CheckFull_A4);

static void BM_Refute_Q8(benchmark::State& state) {
  GroupPtr g = groups::build_quaternion(8);
  auto seeds = engine::default_refutation_seeds(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(engine::refute_full(g, seeds, 1));
}
BENCHMARK(BM_Refute_Q8);

BENCHMARK_MAIN();
