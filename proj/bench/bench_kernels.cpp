#include <benchmark/benchmark.h>

#include "symineq/extremal.hpp"
#include "symineq/measure.hpp"
#include "symineq/search.hpp"

using namespace symineq;

namespace {

DiscreteDistribution extremal_law(long n) {
  const auto p = choose_params(Rational(1));
  return build_extremal({n, Rational(1), p.epsilon, p.r});
}

void BM_PairMassReference(benchmark::State& state) {
  const auto mu = extremal_law(state.range(0));
  const NormBall ball = NormBall::interval(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_mass_reference(mu, ball, PairMode::Sum));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * 4);
}

void BM_PairMass(benchmark::State& state) {
  const auto mu = extremal_law(state.range(0));
  const NormBall ball = NormBall::interval(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_mass(mu, ball, PairMode::Sum));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * 4);
}

void BM_PairMassBigInt(benchmark::State& state) {
  const auto mu = extremal_law(state.range(0));
  const NormBall ball = NormBall::interval(Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_mass_bigint(mu, ball, PairMode::Sum));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * 4);
}

void BM_IntervalSuite(benchmark::State& state) {
  std::vector<DiscreteDistribution> laws;
  for (std::uint64_t i = 0; i < 2000; ++i) laws.push_back(random_distribution(mix_seed(1, i)));
  std::vector<std::pair<Rational, Rational>> grid;
  for (long b = 1; b <= 5; ++b)
    for (long a = 1; a <= 5; ++a) grid.emplace_back(make_rational(b, 2), make_rational(a, 2));
  const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_suite(laws, grid, exec));
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_PairMassReference)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairMass)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairMassBigInt)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
