#include "cfweno/euler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"

namespace cfweno {

template <std::size_t NC>
EigenSystem<NC> EigenSystem<NC>::at(double u, double v, double H, double gamma) {
  EigenSystem e;
  double q2 = u * u;
  if constexpr (NC == 4) q2 += v * v;
  const double c2 = (gamma - 1.0) * (H - 0.5 * q2);
  if (!(c2 > 0.0)) throw std::domain_error("averaged state has no real sound speed");
  const double c = std::sqrt(c2);
  e.u = u;
  e.v = NC == 4 ? v : 0.0;
  e.c = c;
  e.H = H;
  const double b1 = (gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * q2;
  const int E = NC - 1;

  e.lambda[0] = u - c;
  e.lambda[1] = u;
  e.lambda[E] = u + c;

  // Right eigenvectors as columns.
  e.R[0][0] = 1.0;
  e.R[1][0] = u - c;
  e.R[E][0] = H - u * c;
  e.R[0][1] = 1.0;
  e.R[1][1] = u;
  e.R[E][1] = 0.5 * q2;
  e.R[0][E] = 1.0;
  e.R[1][E] = u + c;
  e.R[E][E] = H + u * c;

  e.L[0][0] = 0.5 * (b2 + u / c);
  e.L[0][1] = -0.5 * (b1 * u + 1.0 / c);
  e.L[0][E] = 0.5 * b1;
  e.L[1][0] = 1.0 - b2;
  e.L[1][1] = b1 * u;
  e.L[1][E] = -b1;
  e.L[E][0] = 0.5 * (b2 - u / c);
  e.L[E][1] = -0.5 * (b1 * u - 1.0 / c);
  e.L[E][E] = 0.5 * b1;

  if constexpr (NC == 4) {
    e.lambda[2] = u;
    e.R[2][0] = v;
    e.R[2][1] = v;
    e.R[2][E] = v;
    e.R[2][2] = 1.0;
    e.R[E][2] = v;
    e.L[0][2] = -0.5 * b1 * v;
    e.L[1][2] = b1 * v;
    e.L[E][2] = -0.5 * b1 * v;
    e.L[2][0] = -v;
    e.L[2][2] = 1.0;
  }
  return e;
}

template <std::size_t NC>
EigenSystem<NC> roe_eigensystem(const Cons<NC>& UL, const Cons<NC>& UR, double gamma) {
  const double sl = std::sqrt(UL[0]);
  const double sr = std::sqrt(UR[0]);
  const double wsum = sl + sr;
  const double HL = (UL[NC - 1] + pressure(UL, gamma)) / UL[0];
  const double HR = (UR[NC - 1] + pressure(UR, gamma)) / UR[0];
  const double u = (sl * UL[1] / UL[0] + sr * UR[1] / UR[0]) / wsum;
  double v = 0.0;
  if constexpr (NC == 4) v = (sl * UL[2] / UL[0] + sr * UR[2] / UR[0]) / wsum;
  const double H = (sl * HL + sr * HR) / wsum;
  return EigenSystem<NC>::at(u, v, H, gamma);
}

template <std::size_t NC>
BaselineAverage<NC> average_state(const Cons<NC>& UL, const Cons<NC>& UR, double gamma) {
  BaselineAverage<NC> b;
  for (int m = 0; m < NC; ++m) b.u_b[m] = 0.5 * (UL[m] + UR[m]);
  b.roe = UL[1] / UL[0] > UR[1] / UR[0];
  if (b.roe) {
    b.eig = roe_eigensystem(UL, UR, gamma);
    const auto fl = physical_flux(UL, gamma);
    const auto fr = physical_flux(UR, gamma);
    for (int m = 0; m < NC; ++m) b.f_b[m] = 0.5 * (fl[m] + fr[m]);
  } else {
    const Primitive w = to_primitive(b.u_b, gamma);
    const double H = (b.u_b[NC - 1] + w.p) / w.rho;
    b.eig = EigenSystem<NC>::at(w.u, w.v, H, gamma);
    b.f_b = physical_flux(b.u_b, gamma);
  }
  return b;
}

double guess_middle_pressure(const Primitive& l, const Primitive& r, double gamma, MiddlePressureForm form) {
  const double cl = sound_speed(l, gamma);
  const double cr = sound_speed(r, gamma);
  const double bound = std::pow(4.0 / (1.0 / std::sqrt(l.p) + 1.0 / std::sqrt(r.p)), 2);
  double rarefaction, collision;
  if (form == MiddlePressureForm::printed) {
    rarefaction = std::pow(std::max(0.0, 0.5 * (l.u - r.u + cl / (gamma - 1.0) + cr / (gamma - 1.0))),
                           2.0 * gamma / (gamma - 1.0));
    const double q = 0.5 * (gamma + 1.0);
    collision = std::pow(std::max(0.0, (l.u - r.u) / (1.0 / (std::sqrt(l.rho) * q) + 1.0 / (std::sqrt(r.rho) * q))), 2);
  } else {
    const double z = (gamma - 1.0) / (2.0 * gamma);
    const double num = std::max(0.0, cl + cr - 0.5 * (gamma - 1.0) * (r.u - l.u));
    rarefaction = std::pow(num / (cl / std::pow(l.p, z) + cr / std::pow(r.p, z)), 1.0 / z);
    const double q = 0.5 * (gamma + 1.0);
    collision = std::pow(std::max(0.0, (l.u - r.u) / (1.0 / std::sqrt(l.rho * q) + 1.0 / std::sqrt(r.rho * q))), 2);
  }
  return std::max(std::min(rarefaction, bound), collision);
}

bool pressure_ratio_decides(double pl, double pr, const EulerOptions& opt) {
  const double hi = std::max(std::abs(pl), std::abs(pr));
  const double lo = std::min(std::abs(pl), std::abs(pr));
  return hi >= opt.s1 * lo || pl * pr <= 0.0 || hi < opt.s2 * lo;
}

FluxOption select_flux_option(double pl, double pr, double pm, const EulerOptions& opt) {
  FluxOption o;
  const double hi = std::max(std::abs(pl), std::abs(pr));
  const double lo = std::min(std::abs(pl), std::abs(pr));
  auto set = [&](int option, bool w1, bool w2, bool w3) {
    o.option = option;
    o.high[0] = w1;
    o.high[1] = w2;
    o.high[2] = w3;
    return o;
  };
  if (hi >= opt.s1 * lo || pl * pr <= 0.0) return set(1, false, false, false);
  if (hi < opt.s2 * lo) return set(2, true, true, true);
  if (pl < pm && pm > pr) return set(3, false, false, false);
  if (pl >= pm && pm <= pr) return set(4, true, true, true);
  if (pl < pm && pm <= pr) return set(5, false, true, true);
  return set(6, true, true, false);
}

namespace {

double checked_nu(double lambda, double ratio) {
  const double nu = std::abs(lambda * ratio);
  if (!(nu <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "local Courant number " << nu << " exceeds 1";
    throw CflViolation(os.str());
  }
  return std::min(nu, 1.0);
}

template <Layout L, int R, std::size_t NC>
struct EulerFace {
  using K = Reconstructor<L, R>;
  using Ind = typename K::Indicators;
  static constexpr int W = 2 * R - 1;
  static constexpr int S = L == Layout::compact ? 2 : 1;
  static constexpr int U = W + S;

  double wl[NC][W];
  double wr[NC][W];
  double center[NC];  // L * U_L
  Ind ind_l[NC];
  Ind ind_r[NC];
  bool have_l[NC] = {};
  bool have_r[NC] = {};

  const double* side(int k, double lambda, const Ind*& ind) {
    if (lambda >= 0.0) {
      if (!have_l[k]) {
        ind_l[k] = K::indicators(wl[k]);
        have_l[k] = true;
      }
      ind = &ind_l[k];
      return wl[k];
    }
    if (!have_r[k]) {
      ind_r[k] = K::indicators(wr[k]);
      have_r[k] = true;
    }
    ind = &ind_r[k];
    return wr[k];
  }

  double foot(int k, double lambda, double ratio, Weighting mode, KernelStats* ks) {
    const Ind* ind;
    const double* w = side(k, lambda, ind);
    return K::foot(w, checked_nu(lambda, ratio), *ind, mode, ks);
  }

  // `base` points at the first entry of the union window, R - 1 points left
  // of the left node.
  EulerInterface<NC> run(const Cons<NC>* base, double ratio, const SchemeConfig& cfg, const EulerOptions& opt,
                         EulerStats* stats) {
    KernelStats* ks = stats ? &stats->kernel : nullptr;
    const Cons<NC>& UL = base[R - 1];
    const Cons<NC>& UR = base[R - 1 + S];
    const auto b = average_state(UL, UR, opt.gamma);
    const auto& eig = b.eig;

    for (int e = 0; e < U; ++e) {
      const Cons<NC>& q = base[e];
      for (int k = 0; k < NC; ++k) {
        double acc = 0.0;
        for (int m = 0; m < NC; ++m) acc += eig.L[k][m] * q[m];
        if (e < W) wl[k][e] = acc;
        if (e >= S) wr[k][S + W - 1 - e] = acc;
      }
    }
    for (int k = 0; k < NC; ++k) center[k] = wl[k][R - 1];

    EulerInterface<NC> out;
    double lam_b[NC], phi_b[NC];
    for (int k = 0; k < NC; ++k) {
      double lu = 0.0, lf = 0.0;
      for (int m = 0; m < NC; ++m) {
        lu += eig.L[k][m] * b.u_b[m];
        lf += eig.L[k][m] * b.f_b[m];
      }
      lam_b[k] = eig.lambda[k];
      phi_b[k] = lam_b[k] * lu - lf;
      out.lambda[k] = lam_b[k];
      out.phi[k] = phi_b[k];
    }

    const double pl = pressure(UL, opt.gamma);
    const double pr = pressure(UR, opt.gamma);
    FluxOption option;
    bool baseline_only = true;
    double foot_b[NC];
    bool have_foot_b = false;
    if (!(std::max(std::abs(pl), std::abs(pr)) >= opt.s1 * std::min(std::abs(pl), std::abs(pr)) ||
          pl * pr <= 0.0)) {
      for (int k = 0; k < NC; ++k) foot_b[k] = foot(k, lam_b[k], ratio, cfg.weighting, ks);
      have_foot_b = true;
      double pm = 0.0;
      if (!pressure_ratio_decides(pl, pr, opt))
        pm = guess_middle_pressure(to_primitive(UL, opt.gamma), to_primitive(UR, opt.gamma), opt.gamma,
                                   opt.middle_pressure);
      option = select_flux_option(pl, pr, pm, opt);
      out.option = option.option;
      baseline_only = option.option == 1 || option.option == 3;
      if (!baseline_only) {
        double fk[NC];
        for (int k = 0; k < NC; ++k) fk[k] = foot_b[k];
        for (int it = 0;; ++it) {
          Cons<NC> us;
          for (int m = 0; m < NC; ++m) {
            double acc = 0.0;
            for (int k = 0; k < NC; ++k) acc += eig.R[m][k] * (fk[k] - center[k]);
            us[m] = UL[m] + acc;
          }
          if (!admissible(us, opt.gamma)) {
            out.fallback = true;
            for (int k = 0; k < NC; ++k) {
              out.lambda[k] = lam_b[k];
              out.phi[k] = phi_b[k];
            }
            break;
          }
          double lam_s[NC];
          state_eigenvalues(us, opt.gamma, lam_s);
          const auto fs = physical_flux(us, opt.gamma);
          for (int k = 0; k < NC; ++k) {
            if (!option.high[wave_of_field<NC>(k) - 1]) continue;
            double lu = 0.0, lf = 0.0;
            for (int m = 0; m < NC; ++m) {
              lu += eig.L[k][m] * us[m];
              lf += eig.L[k][m] * fs[m];
            }
            out.lambda[k] = lam_s[k];
            out.phi[k] = lam_s[k] * lu - lf;
          }
          if (it >= cfg.iterations) break;
          for (int k = 0; k < NC; ++k)
            if (option.high[wave_of_field<NC>(k) - 1]) fk[k] = foot(k, out.lambda[k], ratio, cfg.weighting, ks);
        }
      }
    }

    double term[NC], dfoot[NC];
    const bool store_half = L == Layout::compact;
    for (int k = 0; k < NC; ++k) {
      const double lam = out.lambda[k];
      const Ind* ind;
      const double* w = side(k, lam, ind);
      const double nu = checked_nu(lam, ratio);
      const double wbar = K::average(w, nu, *ind, cfg.weighting, ks);
      term[k] = lam * wbar - out.phi[k];
      if (store_half) {
        const double wf = have_foot_b && lam == lam_b[k] ? foot_b[k] : K::foot(w, nu, *ind, cfg.weighting, ks);
        dfoot[k] = wf - center[k];
      }
    }
    for (int m = 0; m < NC; ++m) {
      double f = 0.0, h = 0.0;
      for (int k = 0; k < NC; ++k) {
        f += eig.R[m][k] * term[k];
        if (store_half) h += eig.R[m][k] * dfoot[k];
      }
      out.flux[m] = f;
      out.half[m] = UL[m] + h;
    }
    if (stats) {
      ++stats->options[out.option];
      stats->fallbacks += out.fallback;
      ++stats->faces;
    }
    return out;
  }
};

void check_scheme(const SchemeConfig& cfg, Layout layout, int ghosts) {
  if (cfg.scheme == Scheme::weno_rk3) throw ConfigError("weno-rk3 uses the method-of-lines stepper");
  if (layout != cfg.layout()) throw ConfigError("grid layout does not match the scheme");
  if (ghosts < cfg.r()) throw ConfigError("not enough ghost layers");
}

}  // namespace

template <std::size_t NC>
EulerGrid<NC> make_euler_grid(const SchemeConfig& cfg, int n, double x0, double x1, Boundary left,
                              Boundary right) {
  return EulerGrid<NC>(cfg.layout(), n, x0, x1, cfg.r() + 1, left, right);
}

template <std::size_t NC>
void fill_euler_ghosts(EulerGrid<NC>& g, const EulerInflow<NC>& inflow) {
  fill_ghosts(
      g,
      [](Cons<NC> U) {
        U[1] = -U[1];
        return U;
      },
      inflow);
}

template <std::size_t NC>
double compute_dt_euler(const EulerGrid<NC>& g, double cfl, double gamma) {
  double smax = 0.0;
  for (int p = 0; p < g.interior_size(); ++p) {
    const double s = normal_speed(g.at(p), gamma);
    if (!std::isfinite(s)) throw std::runtime_error("non-finite state");
    smax = std::max(smax, s);
  }
  return smax > 0.0 ? cfl * g.h() / smax : cfl * g.h();
}

template <std::size_t NC>
EulerInterface<NC> euler_interface(const EulerGrid<NC>& g, int face, double tau, const SchemeConfig& cfg,
                                   const EulerOptions& opt, EulerStats* stats) {
  check_scheme(cfg, g.layout, g.ghosts);
  if (face < 0 || face > g.n) throw std::out_of_range("face index");
  const int pl = g.node_index(face - 1);
  return dispatch_layout_r(cfg.r(), g.layout, [&]<Layout L, int R>() {
    EulerFace<L, R, NC> f;
    return f.run(&g.at(pl - (R - 1)), tau / g.h(), cfg, opt, stats);
  });
}

template <std::size_t NC>
void check_positivity(const EulerGrid<NC>& g, double gamma, const char* where) {
  for (int p = 0; p < g.interior_size(); ++p) {
    const auto& U = g.at(p);
    const double p_ = pressure(U, gamma);
    if (!(U[0] > 0.0) || !(p_ > 0.0)) {
      std::ostringstream os;
      os << "positivity failure" << (where[0] ? " in " : "") << where << " at point " << p << " (x = "
         << g.x_point(p) << ", t = " << g.t << "): rho = " << U[0] << ", p = " << p_;
      throw PositivityFailure(os.str());
    }
  }
}

template <std::size_t NC>
void update_euler_line(EulerGrid<NC>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                       EulerStats* stats, bool parallel) {
  check_scheme(cfg, g.layout, g.ghosts);
  const int n = g.n;
  const double ratio = tau / g.h();
  const bool compact = g.layout == Layout::compact;
  std::vector<Cons<NC>> flux(n + 1), half(compact ? n + 1 : 0);
  EulerStats total;
  dispatch_layout_r(cfg.r(), g.layout, [&]<Layout L, int R>() {
    auto body = [&](int j, EulerStats& local) {
      EulerFace<L, R, NC> f;
      const int pl = g.node_index(j - 1);
      auto res = f.run(&g.at(pl - (R - 1)), ratio, cfg, opt, stats ? &local : nullptr);
      flux[j] = res.flux;
      if (compact) half[j] = res.half;
    };
    if (parallel) {
      ErrorSlot err;
#pragma omp parallel num_threads(thread_count(cfg.threads))
      {
        EulerStats local;
#pragma omp for schedule(static)
        for (int j = 0; j <= n; ++j) err.run([&] { body(j, local); });
#pragma omp critical(cfweno_euler_stats)
        total += local;
      }
      err.rethrow();
    } else {
      for (int j = 0; j <= n; ++j) body(j, total);
    }
  });
  for (int i = 0; i < n; ++i) {
    auto& U = g.node(i);
    for (int m = 0; m < NC; ++m) U[m] -= ratio * (flux[i + 1][m] - flux[i][m]);
  }
  if (compact)
    for (int j = 0; j <= n; ++j) g.face(j) = half[j];
  g.t += tau;
  if (stats) *stats += total;
}

namespace {

void step_euler_impl(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                     EulerStats* stats, const EulerInflow<3>& inflow, bool parallel) {
  fill_euler_ghosts(g, inflow);
  update_euler_line(g, tau, cfg, opt, stats, parallel);
  check_positivity(g, opt.gamma);
}

}  // namespace

void step_euler(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt, EulerStats* stats,
                const EulerInflow<3>& inflow) {
  step_euler_impl(g, tau, cfg, opt, stats, inflow, cfg.threads != 1);
}

void step_euler_serial(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                       EulerStats* stats, const EulerInflow<3>& inflow) {
  step_euler_impl(g, tau, cfg, opt, stats, inflow, false);
}

#define CFWENO_EULER_INSTANTIATE(NC)                                                                          \
  template struct EigenSystem<NC>;                                                                            \
  template EigenSystem<NC> roe_eigensystem<NC>(const Cons<NC>&, const Cons<NC>&, double);                     \
  template BaselineAverage<NC> average_state<NC>(const Cons<NC>&, const Cons<NC>&, double);                   \
  template EulerGrid<NC> make_euler_grid<NC>(const SchemeConfig&, int, double, double, Boundary, Boundary);   \
  template void fill_euler_ghosts<NC>(EulerGrid<NC>&, const EulerInflow<NC>&);                                \
  template double compute_dt_euler<NC>(const EulerGrid<NC>&, double, double);                                 \
  template EulerInterface<NC> euler_interface<NC>(const EulerGrid<NC>&, int, double, const SchemeConfig&,     \
                                                  const EulerOptions&, EulerStats*);                          \
  template void check_positivity<NC>(const EulerGrid<NC>&, double, const char*);                              \
  template void update_euler_line<NC>(EulerGrid<NC>&, double, const SchemeConfig&, const EulerOptions&,       \
                                      EulerStats*, bool);

CFWENO_EULER_INSTANTIATE(3)
CFWENO_EULER_INSTANTIATE(4)

}  // namespace cfweno
