#include "cfweno/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"

namespace cfweno {

namespace {

inline Cons2 swap_momenta(Cons2 U) {
  std::swap(U[1], U[2]);
  return U;
}

int line_length(const Field2D& f, Direction d) { return d == Direction::x ? f.mx : f.my; }
int line_count(const Field2D& f, Direction d) { return d == Direction::x ? f.my : f.mx; }

}  // namespace

Field2D::Field2D(Layout l, int cells_x, int cells_y, double ax, double bx, double ay, double by)
    : layout(l), nx(cells_x), ny(cells_y), x0(ax), x1(bx), y0(ay), y1(by) {
  if (cells_x < 1 || cells_y < 1) throw std::invalid_argument("field needs at least one cell");
  if (!(bx > ax) || !(by > ay)) throw std::invalid_argument("empty domain");
  mx = l == Layout::compact ? 2 * nx + 1 : nx;
  my = l == Layout::compact ? 2 * ny + 1 : ny;
  data.resize(static_cast<std::size_t>(mx) * my);
}

void init_field(Field2D& f, const std::function<Primitive(double, double)>& ic, double gamma) {
  for (int j = 0; j < f.my; ++j)
    for (int i = 0; i < f.mx; ++i) f.at(i, j) = to_conservative<4>(ic(f.x_point(i), f.y_point(j)), gamma);
  if (f.layout != Layout::compact) return;
  // Periodic compact lattices hold the wrap face twice; keep both copies equal.
  if (f.x_lo == Boundary::periodic)
    for (int j = 0; j < f.my; ++j) f.at(f.mx - 1, j) = f.at(0, j);
  if (f.y_lo == Boundary::periodic)
    for (int i = 0; i < f.mx; ++i) f.at(i, f.my - 1) = f.at(i, 0);
}

double compute_dt_split(const Field2D& f, double cfl, double gamma) {
  double sx = 0.0, sy = 0.0;
  for (const auto& U : f.data) {
    const Primitive w = to_primitive(U, gamma);
    const double c = sound_speed(w, gamma);
    if (!std::isfinite(c)) throw std::runtime_error("non-finite state");
    sx = std::max(sx, std::abs(w.u) + c);
    sy = std::max(sy, std::abs(w.v) + c);
  }
  const double tx = sx > 0.0 ? f.hx() / sx : f.hx();
  const double ty = sy > 0.0 ? f.hy() / sy : f.hy();
  return cfl * std::min(tx, ty);
}

double compute_dt_unsplit(const Field2D& f, double cfl, double gamma) {
  double sx = 0.0, sy = 0.0;
  for (const auto& U : f.data) {
    const Primitive w = to_primitive(U, gamma);
    const double c = sound_speed(w, gamma);
    if (!std::isfinite(c)) throw std::runtime_error("non-finite state");
    sx = std::max(sx, std::abs(w.u) + c);
    sy = std::max(sy, std::abs(w.v) + c);
  }
  const double rate = sx / f.hx() + sy / f.hy();
  return rate > 0.0 ? cfl / rate : cfl * std::min(f.hx(), f.hy());
}

EulerGrid<4> extract_line(const Field2D& f, Direction d, int index, int ghosts) {
  const bool x = d == Direction::x;
  EulerGrid<4> g(f.layout, x ? f.nx : f.ny, x ? f.x0 : f.y0, x ? f.x1 : f.y1, ghosts, x ? f.x_lo : f.y_lo,
                 x ? f.x_hi : f.y_hi);
  g.t = f.t;
  const int m = line_length(f, d);
  if (x) {
    for (int i = 0; i < m; ++i) g.at(i) = f.at(i, index);
  } else {
    for (int j = 0; j < m; ++j) g.at(j) = swap_momenta(f.at(index, j));
  }
  fill_euler_ghosts(g);
  return g;
}

void store_line(Field2D& f, Direction d, int index, const EulerGrid<4>& line) {
  const int m = line_length(f, d);
  if (d == Direction::x) {
    for (int i = 0; i < m; ++i) f.at(i, index) = line.at(i);
  } else {
    for (int j = 0; j < m; ++j) f.at(index, j) = swap_momenta(line.at(j));
  }
}

namespace {

void sweep_impl(Field2D& f, Direction d, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                EulerStats* stats, bool parallel) {
  if (cfg.scheme == Scheme::weno_rk3) throw ConfigError("weno-rk3 does not use split sweeps");
  if (f.layout != cfg.layout()) throw ConfigError("field layout does not match the scheme");
  const int lines = line_count(f, d);
  const int ghosts = cfg.r() + 1;
  const char* dir = d == Direction::x ? "x" : "y";
  EulerStats total;
  ErrorSlot err;
  auto body = [&](int k, EulerStats& local) {
    auto line = extract_line(f, d, k, ghosts);
    update_euler_line(line, tau, cfg, opt, stats ? &local : nullptr, false);
    for (int p = 0; p < line.interior_size(); ++p) {
      const auto& U = line.at(p);
      if (!(U[0] > 0.0) || !(pressure(U, opt.gamma) > 0.0)) {
        std::ostringstream os;
        const int i = d == Direction::x ? p : k;
        const int j = d == Direction::x ? k : p;
        os << "positivity failure in " << dir << "-sweep at (i, j) = (" << i << ", " << j << "), t = " << f.t
           << ": rho = " << U[0] << ", p = " << pressure(U, opt.gamma);
        throw PositivityFailure(os.str());
      }
    }
    store_line(f, d, k, line);
  };
  // Lines read only their own data, so writing back in place is safe.
  if (parallel) {
#pragma omp parallel num_threads(thread_count(cfg.threads))
    {
      EulerStats local;
#pragma omp for schedule(dynamic, 4)
      for (int k = 0; k < lines; ++k) err.run([&] { body(k, local); });
#pragma omp critical(cfweno_sweep_stats)
      total += local;
    }
    err.rethrow();
  } else {
    for (int k = 0; k < lines; ++k) body(k, total);
  }
  if (stats) *stats += total;
}

void step_2d_impl(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt, EulerStats* stats,
                  SweepOrder order, bool parallel) {
  const double t0 = f.t;
  const bool y_first = order == SweepOrder::alternate && f.steps % 2 == 1;
  const Direction a = y_first ? Direction::y : Direction::x;
  const Direction b = y_first ? Direction::x : Direction::y;
  sweep_impl(f, a, tau, cfg, opt, stats, parallel);
  sweep_impl(f, b, tau, cfg, opt, stats, parallel);
  f.t = t0 + tau;
  ++f.steps;
}

}  // namespace

void sweep(Field2D& f, Direction d, double tau, const SchemeConfig& cfg, const EulerOptions& opt, EulerStats* stats) {
  sweep_impl(f, d, tau, cfg, opt, stats, cfg.threads != 1);
}

void step_2d(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt, EulerStats* stats,
             SweepOrder order) {
  step_2d_impl(f, tau, cfg, opt, stats, order, cfg.threads != 1);
}

void step_2d_serial(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt, EulerStats* stats,
                    SweepOrder order) {
  step_2d_impl(f, tau, cfg, opt, stats, order, false);
}

void check_positivity_2d(const Field2D& f, double gamma, const char* where) {
  for (int j = 0; j < f.my; ++j)
    for (int i = 0; i < f.mx; ++i) {
      const auto& U = f.at(i, j);
      const double p = pressure(U, gamma);
      if (!(U[0] > 0.0) || !(p > 0.0)) {
        std::ostringstream os;
        os << "positivity failure" << (where[0] ? " in " : "") << where << " at (i, j) = (" << i << ", " << j
           << "), t = " << f.t << ": rho = " << U[0] << ", p = " << p;
        throw PositivityFailure(os.str());
      }
    }
}

namespace {

// -div F at every node, both directions.
void residual_2d(const Field2D& f, int r, double gamma, int threads, std::vector<Cons2>& out, WenoStats* stats) {
  out.assign(f.data.size(), Cons2{});
  const int ghosts = r + 1;
  WenoStats total;
  ErrorSlot err;
  const bool par = threads != 1;
  for (Direction d : {Direction::x, Direction::y}) {
    const int lines = line_count(f, d);
    auto body = [&](int k, WenoStats& local) {
      const auto line = extract_line(f, d, k, ghosts);
      std::vector<Cons2> res;
      weno_residual_euler(line, r, gamma, res, &local, false);
      const int m = line_length(f, d);
      for (int p = 0; p < m; ++p) {
        const Cons2 v = d == Direction::x ? res[p] : swap_momenta(res[p]);
        auto& o = d == Direction::x ? out[static_cast<std::size_t>(k) * f.mx + p]
                                    : out[static_cast<std::size_t>(p) * f.mx + k];
        for (int c = 0; c < 4; ++c) o[c] += v[c];
      }
    };
    if (par) {
#pragma omp parallel num_threads(thread_count(threads))
      {
        WenoStats local;
#pragma omp for schedule(dynamic, 4)
        for (int k = 0; k < lines; ++k) err.run([&] { body(k, local); });
#pragma omp critical(cfweno_rk3_2d_stats)
        total += local;
      }
      err.rethrow();
    } else {
      for (int k = 0; k < lines; ++k) body(k, total);
    }
  }
  if (stats) *stats += total;
}

}  // namespace

void step_weno_rk3_2d(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt, WenoStats* stats) {
  if (f.layout != Layout::nodes) throw ConfigError("weno-rk3 runs on a node field");
  const int r = cfg.r();
  const double t0 = f.t;
  const std::vector<Cons2> u0 = f.data;
  std::vector<Cons2> L1, L2, L3;
  const std::size_t N = u0.size();
  residual_2d(f, r, opt.gamma, cfg.threads, L1, stats);
  for (std::size_t q = 0; q < N; ++q)
    for (int c = 0; c < 4; ++c) f.data[q][c] = u0[q][c] + tau * L1[q][c];
  f.t = t0 + tau;
  check_positivity_2d(f, opt.gamma, "rk3 stage 1");
  residual_2d(f, r, opt.gamma, cfg.threads, L2, stats);
  for (std::size_t q = 0; q < N; ++q)
    for (int c = 0; c < 4; ++c) f.data[q][c] = u0[q][c] + 0.25 * tau * (L1[q][c] + L2[q][c]);
  f.t = t0 + 0.5 * tau;
  check_positivity_2d(f, opt.gamma, "rk3 stage 2");
  residual_2d(f, r, opt.gamma, cfg.threads, L3, stats);
  for (std::size_t q = 0; q < N; ++q)
    for (int c = 0; c < 4; ++c) f.data[q][c] = u0[q][c] + tau * (L1[q][c] + L2[q][c] + 4.0 * L3[q][c]) / 6.0;
  f.t = t0 + tau;
  ++f.steps;
  check_positivity_2d(f, opt.gamma);
}

}  // namespace cfweno
