#include <benchmark/benchmark.h>

#include "lhv/automaton.hpp"
#include "lhv/ensemble.hpp"
#include "lhv/quantum.hpp"
#include "lhv/synthesis.hpp"

namespace {

lhv::ModelSpec pair_spec(long long L0, long long L1, int n_crossings) {
  lhv::ModelSpec spec;
  spec.n_primary = 2;
  spec.periods = {L0, L1};
  for (auto [a, b] : lhv::place_crossings(n_crossings, L0, L1)) {
    spec.crossings.push_back({0, 1, a, b, +1});
  }
  return spec;
}

void BM_Step(benchmark::State& state) {
  const lhv::ModelSpec spec = pair_spec(101, 103, static_cast<int>(state.range(0)));
  const lhv::Automaton automaton(spec);
  lhv::ClassicalState s{0, {0, 0}};
  for (auto _ : state) {
    s = automaton.step(s);
    benchmark::DoNotOptimize(s.primary);
  }
}
BENCHMARK(BM_Step)->Arg(1)->Arg(64)->Arg(1024);

void BM_ExactMarginals(benchmark::State& state) {
  const lhv::ModelSpec spec = pair_spec(11, 13, 1);
  for (auto _ : state) {
    auto series = lhv::exact_marginals(spec, {1.0, 0.0}, state.range(0));
    benchmark::DoNotOptimize(series.probs.back()[0]);
  }
}
BENCHMARK(BM_ExactMarginals)->Arg(143)->Arg(572);

void BM_SampleMarginals(benchmark::State& state) {
  const lhv::ModelSpec spec = pair_spec(101, 103, 16);
  for (auto _ : state) {
    auto series = lhv::sample_marginals(spec, {1.0, 0.0}, 100, state.range(0), 1);
    benchmark::DoNotOptimize(series.probs.back()[0]);
  }
}
BENCHMARK(BM_SampleMarginals)->Arg(1000)->Arg(10000);

void BM_Synthesize(benchmark::State& state) {
  lhv::Generator target(5);
  for (int r = 1; r < 5; ++r) {
    for (int c = 0; c < r; ++c) target.set(r, c, 0.01 * (r + c));
  }
  for (auto _ : state) {
    auto report = lhv::synthesize(target, state.range(0));
    benchmark::DoNotOptimize(report.max_error);
  }
}
BENCHMARK(BM_Synthesize)->Arg(10)->Arg(100)->Arg(1000);

void BM_Evolve(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  lhv::Generator g(dim);
  for (int r = 1; r < dim; ++r) {
    for (int c = 0; c < r; ++c) g.set(r, c, 0.01 * (r - c));
  }
  Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(dim);
  psi0(0) = 1.0;
  std::vector<long long> times;
  for (long long t = 0; t <= 32; ++t) times.push_back(t);
  for (auto _ : state) {
    auto waves = lhv::evolve(g, psi0, times);
    benchmark::DoNotOptimize(waves.back()(0));
  }
}
BENCHMARK(BM_Evolve)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
