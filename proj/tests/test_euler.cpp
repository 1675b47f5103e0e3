#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cfweno/cases.hpp"
#include "cfweno/euler.hpp"
#include "cfweno/riemann.hpp"

using namespace cfweno;

namespace {

SchemeConfig config(Scheme s, int order, int iterations = 0) {
  SchemeConfig c;
  c.scheme = s;
  c.order = order;
  c.iterations = iterations;
  return c;
}

EulerGrid<3> sod_grid(const SchemeConfig& cfg, int n) {
  const auto& c = find_case("sod");
  auto g = make_euler_grid<3>(cfg, n, c.x0, c.x1, c.left, c.right);
  init_euler_grid(g, c);
  return g;
}

template <std::size_t NC>
Cons<NC> sub(const Cons<NC>& a, const Cons<NC>& b) {
  Cons<NC> r;
  for (std::size_t k = 0; k < NC; ++k) r[k] = a[k] - b[k];
  return r;
}

// Printed middle-pressure estimate, transcribed term by term.
double printed_pm(const Primitive& l, const Primitive& r, double g) {
  const double cl = std::sqrt(g * l.p / l.rho), cr = std::sqrt(g * r.p / r.rho);
  const double a = std::pow(std::max(0.0, (l.u - r.u + cl / (g - 1) + cr / (g - 1)) / 2), 2 * g / (g - 1));
  const double b = std::pow(4 / (1 / std::sqrt(l.p) + 1 / std::sqrt(r.p)), 2);
  const double q = (g + 1) / 2;
  const double c = std::pow(std::max(0.0, (l.u - r.u) / (1 / (std::sqrt(l.rho) * q) + 1 / (std::sqrt(r.rho) * q))), 2);
  return std::max(std::min(a, b), c);
}

}  // namespace

TEST_CASE("primitive and conservative round trip") {
  const Primitive w{0.8, -0.3, 0.2, 2.5};
  const auto U3 = to_conservative<3>(w);
  const auto U4 = to_conservative<4>(w);
  const auto back3 = to_primitive(U3);
  const auto back4 = to_primitive(U4);
  CHECK(back3.rho == doctest::Approx(0.8));
  CHECK(back3.u == doctest::Approx(-0.3));
  CHECK(back3.p == doctest::Approx(2.5));
  CHECK(back4.v == doctest::Approx(0.2));
  CHECK(back4.p == doctest::Approx(2.5));
  CHECK(U3[2] == doctest::Approx(2.5 / 0.4 + 0.5 * 0.8 * 0.09));
}

TEST_CASE("eigenvectors diagonalize the flux Jacobian") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.2, 3.0), V(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Primitive w{U(rng), V(rng), V(rng), U(rng)};
    const auto S = to_conservative<4>(w);
    const double H = (S[3] + w.p) / w.rho;
    const auto e = EigenSystem<4>::at(w.u, w.v, H);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += e.L[i][k] * e.R[k][j];
        CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
      }
    // A r_k = lambda_k r_k with A from central differences of the flux
    for (int k = 0; k < 4; ++k) {
      const double eps = 1e-6;
      Cons<4> rk, up = S, dn = S;
      for (int m = 0; m < 4; ++m) rk[m] = e.R[m][k];
      for (int m = 0; m < 4; ++m) {
        up[m] += eps * rk[m];
        dn[m] -= eps * rk[m];
      }
      const auto dF = sub(physical_flux(up), physical_flux(dn));
      for (int m = 0; m < 4; ++m)
        CHECK(dF[m] / (2 * eps) == doctest::Approx(e.lambda[k] * rk[m]).scale(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("exact Riemann solver") {
  SUBCASE("Sod") {
    const auto s = exact_riemann({1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 0.1});
    CHECK(s.p_star == doctest::Approx(0.303130178051).epsilon(1e-10));
    CHECK(s.u_star == doctest::Approx(0.927452620049).epsilon(1e-10));
    CHECK_FALSE(s.left_shock());
    CHECK(s.right_shock());
  }
  SUBCASE("double rarefaction") {
    const auto s = exact_riemann({1.0, -2.0, 0.0, 0.4}, {1.0, 2.0, 0.0, 0.4});
    CHECK(s.p_star == doctest::Approx(0.00189387).epsilon(1e-5));
    CHECK(s.u_star == doctest::Approx(0.0).scale(1.0));
  }
  SUBCASE("strong left state") {
    const auto s = exact_riemann({1.0, 0.0, 0.0, 1000.0}, {1.0, 0.0, 0.0, 0.01});
    CHECK(s.p_star == doctest::Approx(460.894).epsilon(1e-5));
    CHECK(s.u_star == doctest::Approx(19.5975).epsilon(1e-5));
  }
  SUBCASE("vacuum is rejected") {
    CHECK_THROWS_AS(exact_riemann({1.0, -20.0, 0.0, 0.4}, {1.0, 20.0, 0.0, 0.4}), std::domain_error);
  }
  SUBCASE("cell average of a constant region") {
    const auto s = exact_riemann({1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 0.1});
    const auto w = riemann_cell_average_primitive(s, 0.5, 0.2, 0.0, 0.1);
    CHECK(w.rho == doctest::Approx(1.0));
    CHECK(w.p == doctest::Approx(1.0));
  }
}

TEST_CASE("middle-pressure estimate matches the printed formula") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> lr(-2.0, 2.0), v(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Primitive l{std::exp(lr(rng)), v(rng), 0.0, std::exp(lr(rng))};
    const Primitive r{std::exp(lr(rng)), v(rng), 0.0, std::exp(lr(rng))};
    CHECK(guess_middle_pressure(l, r) == doctest::Approx(printed_pm(l, r, 1.4)).epsilon(1e-12));
  }
}

TEST_CASE("consistent middle pressure is exact for two rarefactions") {
  // the two-rarefaction pressure is exact when both waves are rarefactions
  const Primitive l{1.0, -0.5, 0.0, 0.4}, r{1.0, 0.5, 0.0, 0.4};
  const auto s = exact_riemann(l, r);
  CHECK(guess_middle_pressure(l, r, 1.4, MiddlePressureForm::consistent) ==
        doctest::Approx(s.p_star).epsilon(1e-10));
}

TEST_CASE("flux option selection") {
  const EulerOptions opt;
  CHECK(select_flux_option(1.0, 2.5, 0.0, opt).option == 1);
  CHECK(select_flux_option(1.0, 1.01, 0.0, opt).option == 2);
  CHECK(select_flux_option(1.0, 1.5, 2.0, opt).option == 3);
  CHECK(select_flux_option(1.0, 1.5, 0.5, opt).option == 4);
  const auto o5 = select_flux_option(1.0, 1.5, 1.2, opt);
  CHECK(o5.option == 5);
  CHECK_FALSE(o5.high[0]);
  CHECK(o5.high[1]);
  CHECK(o5.high[2]);
  const auto o6 = select_flux_option(1.5, 1.0, 1.2, opt);
  CHECK(o6.option == 6);
  CHECK(o6.high[0]);
  CHECK_FALSE(o6.high[2]);
  CHECK(pressure_ratio_decides(1.0, 2.0, opt));
  CHECK_FALSE(pressure_ratio_decides(1.0, 1.5, opt));
}

TEST_CASE("uniform flow is preserved") {
  for (Scheme sc : {Scheme::cfweno, Scheme::fweno})
    for (int order : {3, 5, 7}) {
      const auto cfg = config(sc, order, 1);
      auto g = make_euler_grid<3>(cfg, 20, 0.0, 1.0, Boundary::periodic, Boundary::periodic);
      const auto U = to_conservative<3>({0.7, 0.4, 0.0, 1.3});
      for (auto& p : g.points) p = U;
      for (int k = 0; k < 10; ++k) step_euler(g, compute_dt_euler(g, 0.9), cfg);
      for (int p = 0; p < g.interior_size(); ++p)
        for (int m = 0; m < 3; ++m) CHECK(g.at(p)[m] == doctest::Approx(U[m]).epsilon(1e-13));
    }
}

TEST_CASE("periodic Euler conserves mass, momentum and energy") {
  for (Scheme sc : {Scheme::cfweno, Scheme::fweno}) {
    const auto cfg = config(sc, 5);
    auto g = make_euler_grid<3>(cfg, 50, 0.0, 1.0, Boundary::periodic, Boundary::periodic);
    const auto ic = [](double x) { return Primitive{1.0 + 0.2 * std::sin(2 * M_PI * x), 0.5, 0.0, 1.0}; };
    const auto avg = cell_averages_euler(ic, 0.0, 1.0, 50, {}, kGammaAir);
    for (int i = 0; i < 50; ++i) g.node(i) = avg[i];
    if (g.layout == Layout::compact)
      for (int j = 0; j <= 50; ++j) g.face(j) = to_conservative<3>(ic(g.x_face(j)));
    Cons<3> before{};
    for (int i = 0; i < 50; ++i)
      for (int m = 0; m < 3; ++m) before[m] += g.node(i)[m];
    for (int k = 0; k < 40; ++k) step_euler(g, compute_dt_euler(g, 0.9), cfg);
    Cons<3> after{};
    for (int i = 0; i < 50; ++i)
      for (int m = 0; m < 3; ++m) after[m] += g.node(i)[m];
    for (int m = 0; m < 3; ++m) CHECK(after[m] == doctest::Approx(before[m]).epsilon(1e-12));
  }
}

TEST_CASE("Sod: parallel step equals the serial step") {
  for (Scheme sc : {Scheme::cfweno, Scheme::fweno}) {
    auto cfg = config(sc, 5, 1);
    cfg.threads = 4;
    auto a = sod_grid(cfg, 100);
    auto b = a;
    EulerStats sa, sb;
    for (int k = 0; k < 40; ++k) {
      const double tau = compute_dt_euler(a, 0.9);
      step_euler(a, tau, cfg, {}, &sa);
      step_euler_serial(b, tau, cfg, {}, &sb);
    }
    CHECK(a.points == b.points);
    for (int o = 0; o < 7; ++o) CHECK(sa.options[o] == sb.options[o]);
    CHECK(sa.faces == sb.faces);
  }
}

TEST_CASE("Sod: positive states and a monotone-ish density profile") {
  const auto cfg = config(Scheme::cfweno, 5);
  auto g = sod_grid(cfg, 200);
  while (g.t < 0.2 - 1e-12) step_euler(g, std::min(compute_dt_euler(g, 0.9), 0.2 - g.t), cfg);
  check_positivity(g, kGammaAir);
  const auto s = exact_riemann({1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 0.1});
  double l1 = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double a = g.x_node(i) - 0.5 * g.h(), b = a + g.h();
    l1 += std::abs(to_primitive(g.node(i)).rho - riemann_cell_average_primitive(s, 0.5, 0.2, a, b).rho) * g.h();
  }
  CHECK(l1 < 5e-3);
}

TEST_CASE("negative pressure is reported") {
  const auto cfg = config(Scheme::cfweno, 3);
  auto g = make_euler_grid<3>(cfg, 10, 0.0, 1.0, Boundary::outflow, Boundary::outflow);
  for (auto& p : g.points) p = to_conservative<3>({1.0, 0.0, 0.0, 1.0});
  g.node(4)[2] = -1.0;
  CHECK_THROWS_AS(check_positivity(g, kGammaAir), PositivityFailure);
}

TEST_CASE("reflective wall: symmetric data stay symmetric") {
  for (Scheme sc : {Scheme::cfweno, Scheme::fweno}) {
    const auto cfg = config(sc, 5);
    auto g = make_euler_grid<3>(cfg, 40, 0.0, 1.0, Boundary::reflective, Boundary::reflective);
    const auto ic = [](double x) { return Primitive{1.0, 0.0, 0.0, std::abs(x - 0.5) < 0.1 ? 10.0 : 1.0}; };
    const int m = g.interior_size();
    // mirror-exact data: the pulse edges fall on grid points
    for (int p = 0; p <= m / 2; ++p) g.at(p) = g.at(m - 1 - p) = to_conservative<3>(ic(g.x_point(p)));
    for (int k = 0; k < 30; ++k) step_euler(g, compute_dt_euler(g, 0.8), cfg);
    for (int p = 0; p < m / 2; ++p) {
      const auto& a = g.at(p);
      const auto& b = g.at(m - 1 - p);
      CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-10));
      CHECK(a[1] == doctest::Approx(-b[1]).scale(1.0).epsilon(1e-10));
    }
  }
}
