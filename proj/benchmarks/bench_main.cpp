#include <benchmark/benchmark.h>

#include <vector>

#include "fpppart/matching.hpp"
#include "fpppart/metrics.hpp"
#include "fpppart/partitioner.hpp"

using namespace fpp;

namespace {

std::vector<EdgeRecord> bench_edges(size_t count) {
  auto src = gen_random(100000, count, 7);
  return drain(*src);
}

EdgePartitioner partitioner_for(Method m, uint64_t parts) {
  PartitionerConfig cfg;
  cfg.method = m;
  cfg.parts = parts;
  cfg.seed = 1;
  return EdgePartitioner::make(cfg);
}

void BM_PlaneBuild(benchmark::State& state) {
  const auto q = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProjPlane::build(q));
  }
}
BENCHMARK(BM_PlaneBuild)->Arg(9)->Arg(25)->Arg(64)->Arg(128);

void BM_Matching(benchmark::State& state) {
  const auto plane = ProjPlane::build(static_cast<uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perfect_matching(plane));
  }
}
BENCHMARK(BM_Matching)->Arg(9)->Arg(25)->Arg(64);

void BM_Assign(benchmark::State& state, Method method, uint64_t parts) {
  const auto part = partitioner_for(method, parts);
  const auto edges = bench_edges(1 << 16);
  size_t i = 0;
  for (auto _ : state) {
    const auto& e = edges[i];
    benchmark::DoNotOptimize(part.assign(e.u, e.v));
    i = (i + 1) % edges.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_Assign, fpp_651, Method::Fpp, 651);
BENCHMARK_CAPTURE(BM_Assign, fpp_4557, Method::Fpp, 4557);  // beyond the intersection table
BENCHMARK_CAPTURE(BM_Assign, dfpp_651, Method::Dfpp, 651);
BENCHMARK_CAPTURE(BM_Assign, edge2d_625, Method::Edge2d, 625);
BENCHMARK_CAPTURE(BM_Assign, torus_625, Method::Torus, 625);

void BM_MetricsAccumulate(benchmark::State& state) {
  const auto part = partitioner_for(Method::Fpp, 651);
  const auto edges = bench_edges(1 << 16);
  std::vector<EdgeAssignment> assignments;
  assignments.reserve(edges.size());
  for (const auto& e : edges) assignments.push_back({e.u, e.v, part.assign(e.u, e.v)});
  for (auto _ : state) {
    MetricsAccumulator acc(651);
    for (const auto& a : assignments) acc.add(a);
    benchmark::DoNotOptimize(acc.finalize());
  }
  state.SetItemsProcessed(state.iterations() * assignments.size());
}
BENCHMARK(BM_MetricsAccumulate);

}  // namespace

BENCHMARK_MAIN();
