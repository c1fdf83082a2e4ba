#include <benchmark/benchmark.h>

#include "lrkm/lrkm.hpp"

using lrkm::FracOrder;
using lrkm::Polynomial;
using lrkm::real;

namespace {

lrkm::ProblemSpec square_problem() {
  const Polynomial exact{real(0), real(1) / 2, real(-3) / 2, real(1)};
  return lrkm::manufacture(
      exact, real(1) / 2, FracOrder(real(7) / 4), FracOrder(real(3) / 4), [](const real& x) { return x; },
      [](const real& x) { return x + 1; }, [](const real&) { return real(1); },
      [](const real&, const real& z, const real&) { return -z * z; });
}

void BM_KernelThreePoint(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lrkm::kernel_threepoint(m, real(1) / 2));
}
BENCHMARK(BM_KernelThreePoint)->Arg(3)->Arg(5)->Arg(8)->Arg(10);

void BM_BuildSystem(benchmark::State& state) {
  lrkm::SolverConfig cfg;
  cfg.m = static_cast<int>(state.range(0));
  const lrkm::ProblemSpec spec0 = lrkm::homogenize(square_problem()).spec;
  for (auto _ : state) benchmark::DoNotOptimize(lrkm::build_system(spec0, cfg));
}
BENCHMARK(BM_BuildSystem)->Arg(3)->Arg(5)->Arg(8)->Arg(10);

void BM_Solve(benchmark::State& state) {
  lrkm::SolverConfig cfg;
  cfg.m = static_cast<int>(state.range(0));
  cfg.n = 9;
  const lrkm::ProblemSpec spec = square_problem();
  for (auto _ : state) benchmark::DoNotOptimize(lrkm::solve(spec, cfg));
}
BENCHMARK(BM_Solve)->Arg(3)->Arg(5)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Gamma(benchmark::State& state) {
  real x = real(9) / 4;
  for (auto _ : state) benchmark::DoNotOptimize(lrkm::gamma(x));
}
BENCHMARK(BM_Gamma);

void BM_ExprParse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lrkm::expr::parse("-z*zp - z^3 + sin(pi*xi)/(1 + xi^2)"));
}
BENCHMARK(BM_ExprParse);

void BM_ExprEval(benchmark::State& state) {
  const auto e = lrkm::expr::parse("-z*zp - z^3 + sin(pi*xi)/(1 + xi^2)");
  const real xi = real(3) / 10;
  for (auto _ : state) benchmark::DoNotOptimize(e(xi, real(1) / 7, real(2) / 3));
}
BENCHMARK(BM_ExprEval);

}  // namespace

BENCHMARK_MAIN();
