#include <benchmark/benchmark.h>

#include "fuzzyfp/axioms.hpp"
#include "fuzzyfp/harness.hpp"
#include "fuzzyfp/hypotheses.hpp"
#include "fuzzyfp/rng.hpp"
#include "fuzzyfp/solver.hpp"

using namespace fuzzyfp;

namespace {

void BM_IteratePair(benchmark::State& state) {
  InstanceSpec spec;
  spec.dim = static_cast<std::size_t>(state.range(0));
  const Instance inst = gen_instance(spec);
  const auto& pair = std::get<MapPair>(inst.problem);
  const Point x0(std::vector<double>(spec.dim, 5.0));
  for (auto _ : state) {
    auto r = iterate_pair(pair, inst.mu, inst.nu, x0);
    benchmark::DoNotOptimize(r.z);
  }
}
BENCHMARK(BM_IteratePair)->Arg(1)->Arg(2)->Arg(8);

void BM_IterateQuadruple(benchmark::State& state) {
  InstanceSpec spec;
  spec.scheme = Scheme::quadruple;
  const Instance inst = gen_instance(spec);
  const auto& quad = std::get<MapQuadruple>(inst.problem);
  for (auto _ : state) {
    auto r = iterate_quadruple(quad, inst.mu, inst.nu, Point{5.0, -5.0});
    benchmark::DoNotOptimize(r.z);
  }
}
BENCHMARK(BM_IterateQuadruple);

void BM_EstimateKQuad(benchmark::State& state) {
  InstanceSpec spec;
  spec.scheme = Scheme::quadruple;
  const Instance inst = gen_instance(spec);
  const auto& quad = std::get<MapQuadruple>(inst.problem);
  Rng rng(3);
  SampleSet samples;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    samples.points_x.push_back(inst.mu.carrier().sample(rng));
    samples.points_y.push_back(inst.nu.carrier().sample(rng));
  }
  for (auto _ : state) {
    auto r = estimate_k_quad(quad, inst.mu, inst.nu, samples);
    benchmark::DoNotOptimize(r.first.k_hat);
  }
  const auto n = static_cast<std::int64_t>(samples.points_x.size());
  state.SetItemsProcessed(state.iterations() * n * n * n * n * static_cast<std::int64_t>(samples.grid.size()));
}
BENCHMARK(BM_EstimateKQuad)->Arg(4)->Arg(8);

void BM_FuzzyMetricAxioms(benchmark::State& state) {
  const auto mu = induced_standard(CarrierSpace::box({-10.0, -10.0}, {10.0, 10.0}));
  const TGrid grid = TGrid::standard();
  for (auto _ : state) {
    auto r = check_fm_axioms(mu, TNorm(TNormKind::product), static_cast<std::size_t>(state.range(0)), grid, 42);
    benchmark::DoNotOptimize(r.counts);
  }
}
BENCHMARK(BM_FuzzyMetricAxioms)->Arg(100);

void BM_RunSuite(benchmark::State& state) {
  InstanceSpec base;
  const auto specs = expand_specs(base, 10);
  SuiteOptions options;
  options.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = run_suite(specs, SolveConfig{}, options);
    benchmark::DoNotOptimize(v.passed);
  }
}
BENCHMARK(BM_RunSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
