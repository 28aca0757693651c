#include <benchmark/benchmark.h>

#include <cmath>

#include "symlab/cache.hpp"
#include "symlab/heckman_opdam.hpp"
#include "symlab/jack.hpp"
#include "symlab/lab.hpp"
#include "symlab/macdonald.hpp"

using namespace symlab;

namespace {

Partition hook(int weight, std::size_t n) {
  std::vector<int> parts(n, 0);
  parts[0] = weight - static_cast<int>(n) + 1;
  for (std::size_t i = 1; i < n; ++i) parts[i] = 1;
  return Partition(parts);
}

// Expansion cost with the expansion cache cleared every iteration; operator
// matrices stay memoized after the first run.
void BM_MacdonaldExpand(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  const auto params = MacdonaldParams::make(n, Rational(2, 3), Rational(1, 2));
  const Partition lambda = hook(w, n);
  for (auto _ : state) {
    default_cache().clear();
    benchmark::DoNotOptimize(macdonald_expand(lambda, params));
  }
}
BENCHMARK(BM_MacdonaldExpand)->Args({2, 6})->Args({3, 6})->Args({3, 8})->Args({4, 8});

void BM_JackExpand(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  const Partition lambda = hook(w, n);
  for (auto _ : state) {
    default_cache().clear();
    benchmark::DoNotOptimize(jack_expand(lambda, JackParam::finite(Rational(1, 2))));
  }
}
BENCHMARK(BM_JackExpand)->Args({3, 6})->Args({4, 8});

void BM_ShiftedMacdonald(benchmark::State& state) {
  const auto params = MacdonaldParams::make(3, Rational(2, 3), Rational(1, 2));
  const Partition mu = hook(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(shifted_macdonald(mu, params));
}
BENCHMARK(BM_ShiftedMacdonald)->Arg(3)->Arg(4);

void BM_HOEval(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  QuadratureConfig cfg;
  cfg.nodes_per_dimension = static_cast<int>(state.range(1));
  const double k = state.range(2) / 2.0;
  std::vector<double> s(n), x(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = 1.5 - static_cast<double>(i);
    x[i] = 1.0 - 0.7 * static_cast<double>(i);
  }
  const auto params = HOParams::make(n, k);
  for (auto _ : state) benchmark::DoNotOptimize(ho_eval(params, s, x, cfg));
}
BENCHMARK(BM_HOEval)
    ->Args({2, 64, 2})
    ->Args({2, 64, 1})
    ->Args({3, 32, 2})
    ->Args({3, 48, 2})
    ->Args({4, 16, 2})
    ->Unit(benchmark::kMillisecond);

void BM_JackSchurSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.n = static_cast<std::size_t>(state.range(0));
  spec.max_weight = 6;
  spec.sampler.samples = 100;
  const auto f = Family::jack(JackParam::finite(Rational(1, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(check_schur_convexity(f, spec));
}
BENCHMARK(BM_JackSchurSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LatticeSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.n = 3;
  spec.max_weight = 6;
  spec.sampler.max_label = 4;
  const auto f = Family::macdonald_lattice(Rational(9, 10), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(check_schur_convexity(f, spec));
}
BENCHMARK(BM_LatticeSweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
