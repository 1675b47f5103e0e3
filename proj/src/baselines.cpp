#include "cfweno/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace cfweno {

namespace {

template <int R>
double upwind_value(const double* w) {
  using K = Reconstructor<Layout::nodes, R>;
  return K::foot(w, 0.0, K::indicators(w));
}

double harten(double a, double delta) {
  const double m = std::abs(a);
  if (delta <= 0.0 || m >= delta) return m;
  return 0.5 * (a * a + delta * delta) / delta;
}

}  // namespace

double weno_js_value(int r, std::span<const double> window) {
  if (static_cast<int>(window.size()) != 2 * r - 1) throw std::invalid_argument("window length must be 2r - 1");
  return dispatch_r(r, [&]<int R>() { return upwind_value<R>(window.data()); });
}

std::pair<double, double> weno_js_reconstruct(int r, std::span<const double> nodes) {
  if (static_cast<int>(nodes.size()) != 2 * r) throw std::invalid_argument("need 2r nodes");
  std::vector<double> rev(nodes.rbegin(), nodes.rend() - 1);
  return {weno_js_value(r, nodes.first(2 * r - 1)), weno_js_value(r, rev)};
}

double roe_flux_entropy_fix(double ul, double ur, const ScalarFlux& flux) {
  const double du = ur - ul;
  const double scale = std::max({1.0, std::abs(ul), std::abs(ur)});
  const double a = std::abs(du) < 1e-14 * scale ? flux.df(0.5 * (ul + ur)) : (flux.f(ur) - flux.f(ul)) / du;
  const double delta = std::max({0.0, a - flux.df(ul), flux.df(ur) - a});
  return 0.5 * (flux.f(ul) + flux.f(ur)) - 0.5 * harten(a, delta) * du;
}

template <std::size_t NC>
Cons<NC> roe_flux_entropy_fix(const Cons<NC>& UL, const Cons<NC>& UR, double gamma, double fraction) {
  const auto eig = roe_eigensystem(UL, UR, gamma);
  const auto fl = physical_flux(UL, gamma);
  const auto fr = physical_flux(UR, gamma);
  double amp[NC];
  for (int k = 0; k < NC; ++k) {
    double alpha = 0.0;
    for (int m = 0; m < NC; ++m) alpha += eig.L[k][m] * (UR[m] - UL[m]);
    const bool acoustic = k == 0 || k == NC - 1;
    amp[k] = (acoustic ? harten(eig.lambda[k], fraction * eig.c) : std::abs(eig.lambda[k])) * alpha;
  }
  Cons<NC> F;
  for (int m = 0; m < NC; ++m) {
    double d = 0.0;
    for (int k = 0; k < NC; ++k) d += eig.R[m][k] * amp[k];
    F[m] = 0.5 * (fl[m] + fr[m]) - 0.5 * d;
  }
  return F;
}

void weno_residual_scalar(const ScalarGrid& g, int r, const ScalarFlux& flux, std::vector<double>& out) {
  if (g.layout != Layout::nodes) throw ConfigError("weno-rk3 runs on a node grid");
  const int n = g.n;
  std::vector<double> F(n + 1);
  dispatch_r(r, [&]<int R>() {
    constexpr int W = 2 * R - 1;
    for (int j = 0; j <= n; ++j) {
      const double* base = &g.at(j - 1 - (R - 1));
      double wr[W];
      for (int e = 0; e < W; ++e) wr[e] = base[W - e];
      F[j] = roe_flux_entropy_fix(upwind_value<R>(base), upwind_value<R>(wr), flux);
    }
  });
  out.resize(n);
  const double inv_h = 1.0 / g.h();
  for (int i = 0; i < n; ++i) out[i] = -(F[i + 1] - F[i]) * inv_h;
}

template <std::size_t NC>
void weno_residual_euler(const EulerGrid<NC>& g, int r, double gamma, std::vector<Cons<NC>>& out, WenoStats* stats,
                         bool parallel, int threads) {
  if (g.layout != Layout::nodes) throw ConfigError("weno-rk3 runs on a node grid");
  const int n = g.n;
  std::vector<Cons<NC>> F(n + 1);
  WenoStats total;
  dispatch_r(r, [&]<int R>() {
    constexpr int W = 2 * R - 1;
    auto body = [&](int j, WenoStats& local) {
      const Cons<NC>* base = &g.at(j - 1 - (R - 1));
      const Cons<NC>& UL = base[R - 1];
      const Cons<NC>& UR = base[R];
      const auto eig = roe_eigensystem(UL, UR, gamma);
      double wl[NC][W], wr[NC][W];
      for (int e = 0; e < W + 1; ++e) {
        for (int k = 0; k < NC; ++k) {
          double acc = 0.0;
          for (int m = 0; m < NC; ++m) acc += eig.L[k][m] * base[e][m];
          if (e < W) wl[k][e] = acc;
          if (e >= 1) wr[k][W - e] = acc;
        }
      }
      double dl[NC], dr[NC];
      for (int k = 0; k < NC; ++k) {
        dl[k] = upwind_value<R>(wl[k]) - wl[k][R - 1];
        dr[k] = upwind_value<R>(wr[k]) - wr[k][R - 1];
      }
      Cons<NC> Um, Up;
      for (int m = 0; m < NC; ++m) {
        double a = 0.0, b = 0.0;
        for (int k = 0; k < NC; ++k) {
          a += eig.R[m][k] * dl[k];
          b += eig.R[m][k] * dr[k];
        }
        Um[m] = UL[m] + a;
        Up[m] = UR[m] + b;
      }
      if (!admissible(Um, gamma) || !admissible(Up, gamma)) {
        Um = UL;
        Up = UR;
        ++local.fallbacks;
      }
      F[j] = roe_flux_entropy_fix(Um, Up, gamma);
      ++local.faces;
    };
    if (parallel) {
      ErrorSlot err;
#pragma omp parallel num_threads(thread_count(threads))
      {
        WenoStats local;
#pragma omp for schedule(static)
        for (int j = 0; j <= n; ++j) err.run([&] { body(j, local); });
#pragma omp critical(cfweno_weno_stats)
        total += local;
      }
      err.rethrow();
    } else {
      for (int j = 0; j <= n; ++j) body(j, total);
    }
  });
  out.resize(n);
  const double inv_h = 1.0 / g.h();
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < NC; ++m) out[i][m] = -(F[i + 1][m] - F[i][m]) * inv_h;
  if (stats) *stats += total;
}

void step_weno_rk3_scalar(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux,
                          const std::function<double(double, double, bool)>& inflow) {
  const int n = g.n;
  const int r = cfg.r();
  const double t0 = g.t;
  std::vector<double> u0 = g.nodes(), L1, L2, L3;
  fill_scalar_ghosts(g, inflow);
  weno_residual_scalar(g, r, flux, L1);
  for (int i = 0; i < n; ++i) g.node(i) = u0[i] + tau * L1[i];
  g.t = t0 + tau;
  fill_scalar_ghosts(g, inflow);
  weno_residual_scalar(g, r, flux, L2);
  for (int i = 0; i < n; ++i) g.node(i) = u0[i] + 0.25 * tau * (L1[i] + L2[i]);
  g.t = t0 + 0.5 * tau;
  fill_scalar_ghosts(g, inflow);
  weno_residual_scalar(g, r, flux, L3);
  for (int i = 0; i < n; ++i) g.node(i) = u0[i] + tau * (L1[i] + L2[i] + 4.0 * L3[i]) / 6.0;
  g.t = t0 + tau;
}

void step_weno_rk3_euler(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                         WenoStats* stats, const EulerInflow<3>& inflow) {
  const int n = g.n;
  const int r = cfg.r();
  const bool par = cfg.threads != 1;
  const double t0 = g.t;
  const std::vector<Cons<3>> u0 = g.nodes();
  std::vector<Cons<3>> L1, L2, L3;
  auto stage = [&](std::vector<Cons<3>>& L, double t) {
    g.t = t;
    fill_euler_ghosts(g, inflow);
    weno_residual_euler(g, r, opt.gamma, L, stats, par, cfg.threads);
  };
  stage(L1, t0);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < 3; ++m) g.node(i)[m] = u0[i][m] + tau * L1[i][m];
  check_positivity(g, opt.gamma, "rk3 stage 1");
  stage(L2, t0 + tau);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < 3; ++m) g.node(i)[m] = u0[i][m] + 0.25 * tau * (L1[i][m] + L2[i][m]);
  check_positivity(g, opt.gamma, "rk3 stage 2");
  stage(L3, t0 + 0.5 * tau);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < 3; ++m) g.node(i)[m] = u0[i][m] + tau * (L1[i][m] + L2[i][m] + 4.0 * L3[i][m]) / 6.0;
  g.t = t0 + tau;
  check_positivity(g, opt.gamma);
}

template Cons<3> roe_flux_entropy_fix<3>(const Cons<3>&, const Cons<3>&, double, double);
template Cons<4> roe_flux_entropy_fix<4>(const Cons<4>&, const Cons<4>&, double, double);
template void weno_residual_euler<3>(const EulerGrid<3>&, int, double, std::vector<Cons<3>>&, WenoStats*, bool, int);
template void weno_residual_euler<4>(const EulerGrid<4>&, int, double, std::vector<Cons<4>>&, WenoStats*, bool, int);

}  // namespace cfweno
