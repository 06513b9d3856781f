#include <benchmark/benchmark.h>

#include <random>

#include "g2spin/clifford.hpp"
#include "g2spin/exact_eigenvalue.hpp"
#include "g2spin/g2.hpp"
#include "g2spin/spectral.hpp"
#include "g2spin/torus.hpp"

using namespace g2spin;

static Multivector random_form(std::mt19937_64& rng, int grade) {
  std::uniform_int_distribution<int> coef(-9, 9);
  Multivector x;
  if (grade == 1)
    for (int i = 1; i <= 7; ++i) x += Rational(coef(rng)) * Multivector::blade({i});
  else
    for (const auto& b : two_form_basis()) x += Rational(coef(rng)) * b;
  return x;
}

static void BM_Wedge(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Multivector a = random_form(rng, 2), b = random_form(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge);

static void BM_Hodge(benchmark::State& state) {
  const Multivector w = standard_structure().omega3();
  for (auto _ : state) benchmark::DoNotOptimize(hodge(w));
}
BENCHMARK(BM_Hodge);

static void BM_CliffordAction(benchmark::State& state) {
  const Multivector w = standard_structure().omega3();
  for (auto _ : state) benchmark::DoNotOptimize(clifford_action(w));
}
BENCHMARK(BM_CliffordAction);

static void BM_ContractionIdentity(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Multivector s = random_form(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contraction_identity_check(s));
}
BENCHMARK(BM_ContractionIdentity);

static void BM_PhiKernel(benchmark::State& state) {
  const G2Structure& g2 = standard_structure();
  for (auto _ : state) benchmark::DoNotOptimize(g2.lemma1_check());
}
BENCHMARK(BM_PhiKernel)->Unit(benchmark::kMillisecond);

static void BM_ExactCompare(benchmark::State& state) {
  const ExactEigenvalue x(Rational(69, 4), -1, 17), y(Rational(7, 2), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compare(x, y));
}
BENCHMARK(BM_ExactCompare);

static void BM_DiracFromFunction(benchmark::State& state) {
  const Rational a(1, 2), l(33, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dirac_from_function(7, a, l));
}
BENCHMARK(BM_DiracFromFunction);

static void BM_Predict(benchmark::State& state) {
  const SpectralInput in = preset("three-sasakian");
  for (auto _ : state) benchmark::DoNotOptimize(predict(in));
}
BENCHMARK(BM_Predict);

static void BM_AnalyzeMode(benchmark::State& state) {
  const FourierMode m = FourierMode::from({1, 2, 0, -1, 1, 0, 3});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_mode(m));
}
BENCHMARK(BM_AnalyzeMode)->Unit(benchmark::kMicrosecond);

static void BM_Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_sweep(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(canonical_modes(n).size()));
}
BENCHMARK(BM_Sweep)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
