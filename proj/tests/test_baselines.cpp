#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cfweno/baselines.hpp"
#include "cfweno/cases.hpp"

using namespace cfweno;

namespace {

// Fifth-order WENO-JS value at x_{i+1/2} from u_{i-2} .. u_{i+2}.
double weno5_classic(const double* u) {
  auto sq = [](double x) { return x * x; };
  const double b0 = 13.0 / 12 * sq(u[0] - 2 * u[1] + u[2]) + 0.25 * sq(u[0] - 4 * u[1] + 3 * u[2]);
  const double b1 = 13.0 / 12 * sq(u[1] - 2 * u[2] + u[3]) + 0.25 * sq(u[1] - u[3]);
  const double b2 = 13.0 / 12 * sq(u[2] - 2 * u[3] + u[4]) + 0.25 * sq(3 * u[2] - 4 * u[3] + u[4]);
  const double a0 = 0.1 / sq(1e-6 + b0), a1 = 0.6 / sq(1e-6 + b1), a2 = 0.3 / sq(1e-6 + b2);
  const double q0 = (2 * u[0] - 7 * u[1] + 11 * u[2]) / 6;
  const double q1 = (-u[1] + 5 * u[2] + 2 * u[3]) / 6;
  const double q2 = (2 * u[2] + 5 * u[3] - u[4]) / 6;
  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

// Third-order WENO-JS value from u_{i-1}, u_i, u_{i+1}.
double weno3_classic(const double* u) {
  auto sq = [](double x) { return x * x; };
  const double a0 = (1.0 / 3) / sq(1e-6 + sq(u[1] - u[0]));
  const double a1 = (2.0 / 3) / sq(1e-6 + sq(u[2] - u[1]));
  return (a0 * (-u[0] + 3 * u[1]) / 2 + a1 * (u[1] + u[2]) / 2) / (a0 + a1);
}

}  // namespace

TEST_CASE("WENO-JS values match the classical formulas") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    double u[6];
    for (double& x : u) x = d(rng);
    if (trial % 3 == 0) u[3] += 5.0;  // a jump inside the window
    CHECK(weno_js_value(3, std::span<const double>(u, 5)) == doctest::Approx(weno5_classic(u)).epsilon(1e-12));
    CHECK(weno_js_value(2, std::span<const double>(u, 3)) == doctest::Approx(weno3_classic(u)).epsilon(1e-12));
    // the right-biased value is the mirror image
    const auto [m, p] = weno_js_reconstruct(3, std::span<const double>(u, 6));
    const double mirrored[5] = {u[5], u[4], u[3], u[2], u[1]};
    CHECK(m == doctest::Approx(weno5_classic(u)).epsilon(1e-12));
    CHECK(p == doctest::Approx(weno5_classic(mirrored)).epsilon(1e-12));
  }
}

TEST_CASE("scalar Roe flux with Harten's fix") {
  const auto lin = ScalarFlux::linear(2.0);
  CHECK(roe_flux_entropy_fix(1.0, 3.0, lin) == doctest::Approx(2.0));
  CHECK(roe_flux_entropy_fix(1.0, 3.0, ScalarFlux::linear(-2.0)) == doctest::Approx(-6.0));
  const auto b = ScalarFlux::burgers();
  // shock moving right: upwind flux f(uL)
  CHECK(roe_flux_entropy_fix(2.0, 1.0, b) == doctest::Approx(2.0));
  // shock moving left: f(uR)
  CHECK(roe_flux_entropy_fix(-1.0, -2.0, b) == doctest::Approx(2.0));
  // transonic rarefaction: a = 0, delta = 1, so |a| becomes 1/2 and the flux
  // drops from the central value 1/2 to the Godunov value 0
  CHECK(roe_flux_entropy_fix(-1.0, 1.0, b) == doctest::Approx(0.0).scale(1.0));
  // consistency
  for (double u : {-1.3, 0.0, 0.4}) CHECK(roe_flux_entropy_fix(u, u, b) == doctest::Approx(b.f(u)));
}

TEST_CASE("Euler Roe flux is consistent and upwind for supersonic flow") {
  const auto U = to_conservative<3>({0.9, 0.3, 0.0, 1.7});
  const auto F = roe_flux_entropy_fix(U, U);
  const auto P = physical_flux(U);
  for (int m = 0; m < 3; ++m) CHECK(F[m] == doctest::Approx(P[m]));
  const auto L = to_conservative<3>({1.0, 3.0, 0.0, 1.0});
  const auto R = to_conservative<3>({0.8, 3.2, 0.0, 0.9});
  const auto G = roe_flux_entropy_fix(L, R);
  const auto FL = physical_flux(L);
  for (int m = 0; m < 3; ++m) CHECK(G[m] == doctest::Approx(FL[m]).epsilon(1e-12));
  // 4-component version carries the shear as a passive scalar
  const auto U4 = to_conservative<4>({0.9, 0.3, -0.6, 1.7});
  const auto F4 = roe_flux_entropy_fix(U4, U4);
  const auto P4 = physical_flux(U4);
  for (int m = 0; m < 4; ++m) CHECK(F4[m] == doctest::Approx(P4[m]));
}

TEST_CASE("WENO5 + RK3 converges at fifth order on linear advection") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::weno_rk3;
  cfg.order = 5;
  const auto f = [](double x) { return std::sin(std::numbers::pi * x); };
  double errs[2];
  int k = 0;
  for (int n : {40, 80}) {
    auto g = make_scalar_grid(cfg, n, -1.0, 1.0, Boundary::periodic, Boundary::periodic);
    const auto avg = cell_averages(f, -1.0, 1.0, n);
    for (int i = 0; i < n; ++i) g.node(i) = avg[i];
    // small step so the RK3 error stays below the spatial error
    const double T = 0.5;
    const int steps = static_cast<int>(std::ceil(T / (0.05 * g.h())));
    const double tau = T / steps;
    for (int s = 0; s < steps; ++s) step_weno_rk3_scalar(g, tau, cfg, ScalarFlux::linear());
    const auto exact = cell_averages([&](double x) { return f(x - T); }, -1.0, 1.0, n);
    double e = 0.0;
    for (int i = 0; i < n; ++i) e += std::abs(g.node(i) - exact[i]) * g.h();
    errs[k++] = e;
  }
  CHECK(std::log2(errs[0] / errs[1]) > 4.5);
}

TEST_CASE("WENO + RK3 conserves and stays bounded on a square wave") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::weno_rk3;
  cfg.order = 5;
  auto g = make_scalar_grid(cfg, 50, -1.0, 1.0, Boundary::periodic, Boundary::periodic);
  const auto sq = [](double x) { return std::abs(x) < 1.0 / 3.0 ? 1.0 : 0.0; };
  const auto avg = cell_averages(sq, -1.0, 1.0, 50, {-1.0 / 3.0, 1.0 / 3.0});
  for (int i = 0; i < 50; ++i) g.node(i) = avg[i];
  double before = 0.0;
  for (double v : g.nodes()) before += v;
  for (int s = 0; s < 100; ++s) step_weno_rk3_scalar(g, 0.6 * g.h(), cfg, ScalarFlux::linear());
  double after = 0.0, lo = 1.0, hi = 0.0;
  for (double v : g.nodes()) {
    after += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(after == doctest::Approx(before).epsilon(1e-12));
  CHECK(lo > -0.02);
  CHECK(hi < 1.02);
}

TEST_CASE("WENO + RK3 Euler: parallel residual equals the serial one") {
  SchemeConfig cfg;
  cfg.scheme = Scheme::weno_rk3;
  cfg.order = 5;
  const auto& c = find_case("sod");
  auto g = make_euler_grid<3>(cfg, 120, c.x0, c.x1, c.left, c.right);
  init_euler_grid(g, c);
  fill_euler_ghosts(g);
  std::vector<Cons<3>> a, b;
  WenoStats sa, sb;
  weno_residual_euler(g, 3, kGammaAir, a, &sa, true, 4);
  weno_residual_euler(g, 3, kGammaAir, b, &sb, false, 1);
  CHECK(a == b);
  CHECK(sa.faces == sb.faces);
  // and a full step keeps the states physical
  for (int s = 0; s < 20; ++s) step_weno_rk3_euler(g, compute_dt_euler(g, 0.6), cfg);
  check_positivity(g, kGammaAir);
}
