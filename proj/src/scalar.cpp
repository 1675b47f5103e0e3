#include "cfweno/scalar.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <sstream>
#include <vector>

#include "parallel.hpp"

namespace cfweno {

ScalarFlux ScalarFlux::from_name(const std::string& name) {
  if (name == "linear") return linear();
  if (name == "burgers") return burgers();
  throw ConfigError("unknown flux '" + name + "'");
}

void SchemeConfig::validate() const {
  order_to_r(order);
  if (scheme == Scheme::weno_rk3) {
    if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1) for weno-rk3");
  } else if (!(cfl > 0.0 && cfl <= 1.0)) {
    throw ConfigError("cfl must lie in (0, 1]");
  }
  if (iterations < 0) throw ConfigError("iterations must be non-negative");
}

LinearizedFlux linearize_flux_scalar(double u_left, double u_right, double u_star, const ScalarFlux& flux,
                                     double tau, double h) {
  const double lambda = tau / h;
  const double nu_l = flux.df(u_left) * lambda;
  const double nu_r = flux.df(u_right) * lambda;
  LinearizedFlux out;
  if (nu_l > nu_r) {
    const double du = u_right - u_left;
    const double scale = std::max({1.0, std::abs(u_left), std::abs(u_right)});
    if (std::abs(du) < 1e-14 * scale) out.a = flux.df(0.5 * (u_left + u_right));
    else out.a = (flux.f(u_right) - flux.f(u_left)) / du;
    out.f_star = out.a * 0.5 * (u_left + u_right) - 0.5 * (flux.f(u_left) + flux.f(u_right));
  } else {
    out.a = flux.df(u_star);
    out.f_star = out.a * u_star - flux.f(u_star);
  }
  return out;
}

namespace {

double checked_nu(double a, double lambda) {
  const double nu = std::abs(a * lambda);
  if (!(nu <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "local Courant number " << nu << " exceeds 1";
    throw CflViolation(os.str());
  }
  return std::min(nu, 1.0);
}

template <Layout L, int R>
struct ScalarKernel {
  using K = Reconstructor<L, R>;
  static constexpr int W = 2 * R - 1;

  double wl[W];
  double wr[W];
  typename K::Indicators ind_l{};
  typename K::Indicators ind_r{};
  bool have_l = false;
  bool have_r = false;

  ScalarKernel(const double* base, int pl, int pr) {
    for (int e = 0; e < W; ++e) {
      wl[e] = base[pl - (R - 1) + e];
      wr[e] = base[pr + (R - 1) - e];
    }
  }

  // Upwind window and indicators for a wave speed; a = 0 takes the left side.
  std::pair<const double*, const typename K::Indicators*> side(double a) {
    if (a >= 0.0) {
      if (!have_l) {
        ind_l = K::indicators(wl);
        have_l = true;
      }
      return {wl, &ind_l};
    }
    if (!have_r) {
      ind_r = K::indicators(wr);
      have_r = true;
    }
    return {wr, &ind_r};
  }

  InterfaceResult run(double ul, double ur, double lambda, int iterations, Weighting mode,
                      const ScalarFlux& flux, KernelStats* stats) {
    InterfaceResult res;
    // Iteration 0 is the baseline linearization (Roe speed or midpoint);
    // each further iteration takes a from the foot value at the previous a.
    double a, f_star;
    if (flux.df(ul) * lambda > flux.df(ur) * lambda) {
      const auto lin = linearize_flux_scalar(ul, ur, 0.0, flux, lambda, 1.0);
      a = lin.a;
      f_star = lin.f_star;
      res.shock_branch = true;
    } else {
      const double um = 0.5 * (ul + ur);
      a = flux.df(um);
      f_star = a * um - flux.f(um);
    }
    for (int it = 0; it < iterations; ++it) {
      auto [w, ind] = side(a);
      const double us = K::foot(w, checked_nu(a, lambda), *ind, mode, stats);
      a = flux.df(us);
      f_star = a * us - flux.f(us);
    }
    const double nu = checked_nu(a, lambda);
    auto [w, ind] = side(a);
    const double ubar = K::average(w, nu, *ind, mode, stats);
    res.half_value = K::foot(w, nu, *ind, mode, stats);
    res.flux = a * ubar - f_star;
    res.a = a;
    res.f_star = f_star;
    return res;
  }
};

void check_layout(const ScalarGrid& g, const SchemeConfig& cfg) {
  if (cfg.scheme == Scheme::weno_rk3) throw ConfigError("weno-rk3 uses the method-of-lines stepper");
  if (g.layout != cfg.layout()) throw ConfigError("grid layout does not match the scheme");
  if (g.ghosts < cfg.r()) throw ConfigError("not enough ghost layers");
}

template <bool Parallel>
void step_impl(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux, StepStats* stats,
               const std::function<double(double, double, bool)>& inflow) {
  check_layout(g, cfg);
  fill_scalar_ghosts(g, inflow);
  const int n = g.n;
  const double lambda = tau / g.h();
  const int stride = g.node_stride();
  const bool compact = g.layout == Layout::compact;
  std::vector<double> flux_at(n + 1), half_at(compact ? n + 1 : 0);
  const double* base = &g.at(0);
  StepStats total;
  dispatch_layout_r(cfg.r(), g.layout, [&]<Layout L, int R>() {
    ErrorSlot err;
    auto body = [&](int j, StepStats& local) {
      const int pl = g.node_index(j - 1);
      const int pr = pl + stride;
      ScalarKernel<L, R> kern(base, pl, pr);
      auto res = kern.run(base[pl], base[pr], lambda, cfg.iterations, cfg.weighting, flux, &local.kernel);
      flux_at[j] = res.flux;
      if (compact) half_at[j] = res.half_value;
      local.shock_faces += res.shock_branch;
      ++local.faces;
    };
    if constexpr (Parallel) {
#pragma omp parallel num_threads(thread_count(cfg.threads))
      {
        StepStats local;
#pragma omp for schedule(static)
        for (int j = 0; j <= n; ++j) err.run([&] { body(j, local); });
#pragma omp critical(cfweno_scalar_stats)
        total += local;
      }
    } else {
      for (int j = 0; j <= n; ++j) body(j, total);
    }
    err.rethrow();
  });
  for (int i = 0; i < n; ++i) g.node(i) -= lambda * (flux_at[i + 1] - flux_at[i]);
  if (compact)
    for (int j = 0; j <= n; ++j) g.face(j) = half_at[j];
  g.t += tau;
  if (stats) *stats += total;
}

}  // namespace

ScalarGrid make_scalar_grid(const SchemeConfig& cfg, int n, double x0, double x1, Boundary left,
                            Boundary right) {
  return ScalarGrid(cfg.layout(), n, x0, x1, cfg.r() + 1, left, right);
}

double compute_dt(const ScalarGrid& g, const ScalarFlux& flux, double cfl) {
  double amax = 0.0;
  for (int p = 0; p < g.interior_size(); ++p) {
    const double v = g.at(p);
    if (!std::isfinite(v)) throw std::runtime_error("non-finite state");
    amax = std::max(amax, std::abs(flux.df(v)));
  }
  return amax > 0.0 ? cfl * g.h() / amax : cfl * g.h();
}

void fill_scalar_ghosts(ScalarGrid& g, const std::function<double(double, double, bool)>& inflow) {
  fill_ghosts(g, [](double v) { return v; }, inflow);
}

InterfaceResult scalar_interface(const ScalarGrid& g, int face, double tau, const SchemeConfig& cfg,
                                 const ScalarFlux& flux, KernelStats* stats) {
  check_layout(g, cfg);
  if (face < 0 || face > g.n) throw std::out_of_range("face index");
  const int pl = g.node_index(face - 1);
  const int pr = pl + g.node_stride();
  return dispatch_layout_r(cfg.r(), g.layout, [&]<Layout L, int R>() {
    ScalarKernel<L, R> kern(&g.at(0), pl, pr);
    return kern.run(g.at(pl), g.at(pr), tau / g.h(), cfg.iterations, cfg.weighting, flux, stats);
  });
}

LinearizedFlux fixed_point_eigenvalue(const ScalarGrid& g, int face, double tau, const SchemeConfig& cfg,
                                      const ScalarFlux& flux, int k) {
  SchemeConfig c = cfg;
  c.iterations = k;
  const auto res = scalar_interface(g, face, tau, c, flux);
  return {res.a, res.f_star};
}

void step_scalar(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux, StepStats* stats,
                 const std::function<double(double, double, bool)>& inflow) {
  if (cfg.threads == 1) step_impl<false>(g, tau, cfg, flux, stats, inflow);
  else step_impl<true>(g, tau, cfg, flux, stats, inflow);
}

void step_scalar_serial(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux,
                        StepStats* stats, const std::function<double(double, double, bool)>& inflow) {
  step_impl<false>(g, tau, cfg, flux, stats, inflow);
}

}  // namespace cfweno
