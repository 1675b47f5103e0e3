// Serial against OpenMP for one step of each solver.
// Run: ./build/bench/bench_steps [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "cfweno/baselines.hpp"
#include "cfweno/cases.hpp"
#include "cfweno/multidim.hpp"
#include "cfweno/runner.hpp"

using namespace cfweno;

namespace {

SchemeConfig config(Scheme s, int threads) {
  SchemeConfig c;
  c.scheme = s;
  c.order = 5;
  c.threads = threads;
  return c;
}

ScalarGrid scalar_grid(const SchemeConfig& cfg, int n) {
  auto g = make_scalar_grid(cfg, n, -1.0, 1.0, Boundary::periodic, Boundary::periodic);
  const auto f = [](double x) { return 0.5 + std::sin(std::numbers::pi * x); };
  const auto avg = cell_averages(f, -1.0, 1.0, n);
  for (int i = 0; i < n; ++i) g.node(i) = avg[i];
  if (g.layout == Layout::compact)
    for (int j = 0; j <= n; ++j) g.face(j) = f(g.x_face(j));
  return g;
}

// state.range(0): 1 = serial, 0 = OpenMP default thread count
void scalar_step(benchmark::State& state, Scheme s) {
  const bool serial = state.range(0) == 1;
  const auto cfg = config(s, serial ? 1 : 0);
  const auto flux = ScalarFlux::burgers();
  const auto start = scalar_grid(cfg, 1 << 15);
  const double tau = 0.5 * compute_dt(start, flux, 0.9);
  for (auto _ : state) {
    state.PauseTiming();
    auto g = start;
    state.ResumeTiming();
    if (serial) step_scalar_serial(g, tau, cfg, flux);
    else step_scalar(g, tau, cfg, flux);
    benchmark::DoNotOptimize(g.points.data());
  }
}

void euler_step(benchmark::State& state, Scheme s) {
  const bool serial = state.range(0) == 1;
  const auto cfg = config(s, serial ? 1 : 0);
  const auto& sod = find_case("sod");
  auto start = make_euler_grid<3>(cfg, 1 << 14, sod.x0, sod.x1, sod.left, sod.right);
  init_euler_grid(start, sod);
  const double tau = compute_dt_euler(start, 0.9);
  for (auto _ : state) {
    state.PauseTiming();
    auto g = start;
    state.ResumeTiming();
    if (s == Scheme::weno_rk3) step_weno_rk3_euler(g, tau, cfg);
    else if (serial) step_euler_serial(g, tau, cfg);
    else step_euler(g, tau, cfg);
    benchmark::DoNotOptimize(g.points.data());
  }
}

void step_2d_bench(benchmark::State& state, Scheme s) {
  const bool serial = state.range(0) == 1;
  const auto cfg = config(s, serial ? 1 : 0);
  const auto& c = find_case("riemann-2d-config3");
  const int res = 400;
  const int n = cells_for_resolution(s, res);
  Field2D start(cfg.layout(), n, n, c.x0, c.x1, c.y0, c.y1);
  start.set_boundaries(c.left, c.bottom);
  init_field(start, c.ic2d);
  for (auto _ : state) {
    state.PauseTiming();
    auto f = start;
    state.ResumeTiming();
    if (s == Scheme::weno_rk3) step_weno_rk3_2d(f, compute_dt_unsplit(f, 0.6), cfg);
    else if (serial) step_2d_serial(f, compute_dt_split(f, 0.9), cfg);
    else step_2d(f, compute_dt_split(f, 0.9), cfg);
    benchmark::DoNotOptimize(f.data.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(scalar_step, cfweno5, Scheme::cfweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(scalar_step, fweno5, Scheme::fweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(euler_step, cfweno5, Scheme::cfweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(euler_step, fweno5, Scheme::fweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(euler_step, weno5_rk3, Scheme::weno_rk3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(step_2d_bench, cfweno5, Scheme::cfweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(step_2d_bench, fweno5, Scheme::fweno)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(step_2d_bench, weno5_rk3, Scheme::weno_rk3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
