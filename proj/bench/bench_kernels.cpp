// Serial reference kernels against the OpenMP ones, plus a small study run
// with and without the pair-level pool.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "burgers/analysis.hpp"
#include "burgers/kernels.hpp"

using namespace burgers;

namespace {

struct Fixture {
  std::vector<double> a, b, out;
  SchemeContext ctx;
  Tridiagonal J;

  explicit Fixture(int N) : a(N + 1), b(N + 1), out(N + 1) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i <= N; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    ctx.h = 1.0 / N;
    ctx.k = 1e-4;
    ctx.params = ModelParams{1.0, 5.0, 1.0, 1.0, 0.5};
  }
};

template <bool Parallel>
void BM_residual(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) kernels::residual_parallel(f.a, f.b, f.ctx, f.out);
    else kernels::residual_serial(f.a, f.b, f.ctx, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_jacobian(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) kernels::jacobian_parallel(f.a, f.b, f.ctx, f.J);
    else kernels::jacobian_serial(f.a, f.b, f.ctx, f.J);
    benchmark::DoNotOptimize(f.J.diag.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_study(benchmark::State& state) {
  analysis::StudyPlan plan;
  plan.mode = analysis::Mode::spatial;
  plan.resolutions = {20, 40, 80, 160};
  plan.fixed_other = 500;
  plan.params = ModelParams{1.0, 5.0, 1.0, 1.0, 1.0};
  for (auto _ : state) {
    auto r = analysis::run_study(plan, Parallel);
    benchmark::DoNotOptimize(r.pairs.data());
  }
}

}  // namespace

BENCHMARK(BM_residual<false>)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_residual<true>)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_jacobian<false>)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_jacobian<true>)->RangeMultiplier(4)->Range(256, 1 << 18);
BENCHMARK(BM_study<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_study<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
