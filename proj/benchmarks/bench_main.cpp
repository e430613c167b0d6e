#include <benchmark/benchmark.h>

#include <random>

#include "dualhelm/functionals.hpp"
#include "dualhelm/solver.hpp"

using namespace dualhelm;

static void BM_EvalH(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  PointCoeffs c{1.3, state.range(0) / 10.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(eval_h(c, u(rng), u(rng)));
}
BENCHMARK(BM_EvalH)->Arg(0)->Arg(10)->Arg(25);

static void BM_GradH(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  PointCoeffs c{1.3, 2.5, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(grad_h(c, u(rng), u(rng)));
}
BENCHMARK(BM_GradH);

static void BM_Convolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Grid g = build_grid(3, n, 16.0);
  Field f(g);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (auto& v : f.values()) v = nd(rng);
  Convolver conv(g);
  KernelSpec ks{3, 1.0, default_epsilon(g, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(conv.convolve(f, ks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Convolve)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_SolverIteration(benchmark::State& state) {
  Grid g = build_grid(3, static_cast<int>(state.range(0)), 16.0);
  DualFunctional ctx(ProblemSpec::create(3, 5.0, 1.0, 1.0), sample_coefficients(1.0, 2.5, g, 5.0));
  SolverOptions o;
  o.max_iters = 10;
  o.restarts = 1;
  SolverOptions so;
  so.max_iters = 50;
  so.restarts = 2;
  auto scalar = solve_scalar(ctx.coeffs(), 1.0, ctx.spec(), so);
  ScalarSeeds seeds;
  seeds.mu = seeds.nu = &scalar;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_F(ctx, o, seeds).level);
  state.SetItemsProcessed(state.iterations() * o.max_iters);
}
BENCHMARK(BM_SolverIteration)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
