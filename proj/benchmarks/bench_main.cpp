#include <benchmark/benchmark.h>

#include "superform/fock.hpp"
#include "superform/invariants.hpp"
#include "superform/reduction.hpp"

using namespace superform;

static void BM_ClassifyCanonical(benchmark::State& state) {
  const auto labels = table_labels({Exact(2), Exact(Rational(1), Rational(1))});
  const Matrix<Exact> b = canonical_matrix(labels[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(b));
  state.SetLabel(labels[static_cast<std::size_t>(state.range(0))].name());
}
BENCHMARK(BM_ClassifyCanonical)->DenseRange(0, 6);

static void BM_ClassifyRandom(benchmark::State& state) {
  Rng rng(1);
  const SuperDims d{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1))};
  std::vector<Matrix<Exact>> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(random_matrix(d.k, d.two_ell, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_ClassifyRandom)->Args({1, 2})->Args({3, 4})->Args({5, 2})->Args({1, 6});

static void BM_Signature(benchmark::State& state) {
  Rng rng(2);
  const Matrix<Exact> b = random_matrix(3, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(signature(b));
}
BENCHMARK(BM_Signature);

static void BM_NormalOrder(benchmark::State& state) {
  auto alg = std::make_shared<const SuperAlgebra>(oscillator_algebra(inhomogeneous_example_form()));
  std::vector<std::size_t> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(static_cast<std::size_t>(2 - i % 3));
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(alg, {{word, Exact(1)}}));
}
BENCHMARK(BM_NormalOrder)->DenseRange(2, 8, 2);

static void BM_OspTable(benchmark::State& state) {
  auto alg = std::make_shared<const SuperAlgebra>(oscillator_algebra(inhomogeneous_example_form()));
  OspGenerators g = osp_generators(alg);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_table(g));
}
BENCHMARK(BM_OspTable);

static void BM_FockChecks(benchmark::State& state) {
  auto alg = std::make_shared<const SuperAlgebra>(oscillator_algebra(inhomogeneous_example_form()));
  OspGenerators g = osp_generators(alg);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osp_action_check(g, FockVariant::Inhomogeneous, n));
}
BENCHMARK(BM_FockChecks)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
