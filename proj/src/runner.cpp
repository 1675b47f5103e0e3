#include "cfweno/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfweno/baselines.hpp"
#include "cfweno/riemann.hpp"

namespace cfweno {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shortens the last step so the run lands on T.
double clip_step(double dt, double t, double T) { return t + dt > T - 1e-9 * dt ? T - t : dt; }

bool done(double t, double T) { return !(T - t > 1e-12 * std::max(1.0, std::abs(T))); }

double wrap(double x, double x0, double length) {
  double y = std::fmod(x - x0, length);
  if (y < 0.0) y += length;
  return x0 + y;
}

// Mean of piecewise-constant data on `fine` cells over each of n coarse cells.
std::vector<double> restrict_average(const std::vector<double>& fine, double x0, double x1, int n) {
  const int m = static_cast<int>(fine.size());
  const double H = (x1 - x0) / m, h = (x1 - x0) / n;
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double a = x0 + i * h, b = a + h;
    int k = std::max(0, static_cast<int>(std::floor((a - x0) / H)));
    double acc = 0.0;
    for (; k < m; ++k) {
      const double lo = x0 + k * H, hi = lo + H;
      if (lo >= b) break;
      const double overlap = std::min(hi, b) - std::max(lo, a);
      if (overlap > 0.0) acc += overlap * fine[k];
    }
    out[i] = acc / h;
  }
  return out;
}

std::string cache_path(const CaseSpec& c, const RunConfig& cfg, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_weno5_N%d_t%.9g.csv", cfg.reference_cells, t);
  return (fs::path(cfg.cache_dir) / (c.name + buf)).string();
}

std::vector<double> fine_grid_density(const CaseSpec& c, double t, const RunConfig& cfg) {
  const std::string path = cache_path(c, cfg, t);
  std::vector<double> rho;
  if (std::ifstream in(path); in) {
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      double x, r;
      char comma;
      if (ls >> x >> comma >> r) rho.push_back(r);
    }
    if (static_cast<int>(rho.size()) == cfg.reference_cells) return rho;
    rho.clear();
  }
  RunConfig ref = cfg;
  ref.case_name = c.name;
  ref.scheme = SchemeConfig{};
  ref.scheme.scheme = Scheme::weno_rk3;
  ref.scheme.order = 5;
  ref.scheme.cfl = 0.6;
  ref.scheme.threads = cfg.scheme.threads;
  ref.grid_x = cfg.reference_cells;
  ref.t_end = t;
  ref.reference = false;
  ref.out_dir.clear();
  const RunReport r = run_case(ref);
  fs::create_directories(cfg.cache_dir);
  std::ofstream out(path);
  out << "x,rho\n";
  out.precision(17);
  for (std::size_t i = 0; i < r.x.size(); ++i) out << r.x[i] << ',' << r.field[i] << '\n';
  return r.field;
}

void finish_scalar(const ScalarGrid& g, RunReport& rep) {
  rep.error_field = "u";
  for (int i = 0; i < g.n; ++i) {
    rep.x.push_back(g.x_node(i));
    rep.field.push_back(g.node(i));
  }
}

void finish_euler(const EulerGrid<3>& g, double gamma, RunReport& rep) {
  rep.error_field = "rho";
  for (int i = 0; i < g.n; ++i) {
    rep.x.push_back(g.x_node(i));
    rep.states.push_back(to_primitive(g.node(i), gamma));
    rep.field.push_back(g.node(i)[0]);
  }
}

void run_scalar(const CaseSpec& c, const SchemeConfig& s, double T, RunReport& rep, int n) {
  const bool rk3 = s.scheme == Scheme::weno_rk3;
  ScalarGrid g = rk3 ? ScalarGrid(Layout::nodes, n, c.x0, c.x1, s.r() + 1, c.left, c.right)
                     : make_scalar_grid(s, n, c.x0, c.x1, c.left, c.right);
  init_scalar_grid(g, c);
  StepStats st;
  auto step = [&](double tau) {
    if (rk3) step_weno_rk3_scalar(g, tau, s, c.flux);
    else step_scalar(g, tau, s, c.flux, &st);
    ++rep.steps;
  };
  const auto t0 = Clock::now();
  if (c.flux.kind == ScalarFlux::Kind::linear) {
    // Constant speed: equal steps that land on T.
    if (T > 0.0) {
      const double tau0 = s.cfl * g.h() / std::abs(c.flux.speed);
      const long long nst = static_cast<long long>(std::ceil(T / tau0 - 1e-9));
      const double tau = T / static_cast<double>(nst);
      for (long long k = 0; k < nst; ++k) step(tau);
    }
  } else {
    while (!done(g.t, T)) step(clip_step(compute_dt(g, c.flux, s.cfl), g.t, T));
  }
  rep.wall_seconds = seconds_since(t0);
  rep.counters.faces = rk3 ? 0 : st.faces;
  rep.counters.shock_faces = st.shock_faces;
  rep.counters.clamps = st.kernel.clamps;
  rep.counters.splits = st.kernel.splits;
  rep.cells_x = n;
  rep.points_x = g.interior_size();
  finish_scalar(g, rep);
}

void run_euler1d(const CaseSpec& c, const SchemeConfig& s, const EulerOptions& opt, double T, RunReport& rep,
                 int n) {
  const bool rk3 = s.scheme == Scheme::weno_rk3;
  EulerGrid<3> g = rk3 ? EulerGrid<3>(Layout::nodes, n, c.x0, c.x1, s.r() + 1, c.left, c.right)
                       : make_euler_grid<3>(s, n, c.x0, c.x1, c.left, c.right);
  init_euler_grid(g, c);
  EulerStats es;
  WenoStats ws;
  const auto t0 = Clock::now();
  while (!done(g.t, T)) {
    const double tau = clip_step(compute_dt_euler(g, s.cfl, opt.gamma), g.t, T);
    if (rk3) step_weno_rk3_euler(g, tau, s, opt, &ws);
    else step_euler(g, tau, s, opt, &es);
    ++rep.steps;
  }
  rep.wall_seconds = seconds_since(t0);
  if (rk3) {
    rep.counters.faces = ws.faces;
    rep.counters.fallbacks = ws.fallbacks;
  } else {
    rep.counters.faces = es.faces;
    rep.counters.fallbacks = es.fallbacks;
    rep.counters.clamps = es.kernel.clamps;
    rep.counters.splits = es.kernel.splits;
    for (int k = 0; k < 7; ++k) rep.counters.options[k] = es.options[k];
  }
  rep.cells_x = n;
  rep.points_x = g.interior_size();
  finish_euler(g, opt.gamma, rep);
}

void run_euler2d(const CaseSpec& c, const SchemeConfig& s, const EulerOptions& opt, double T,
                 SweepOrder order, RunReport& rep, int res_x, int res_y) {
  const bool rk3 = s.scheme == Scheme::weno_rk3;
  const int nx = cells_for_resolution(s.scheme, res_x);
  const int ny = cells_for_resolution(s.scheme, res_y);
  Field2D f(s.layout(), nx, ny, c.x0, c.x1, c.y0, c.y1);
  f.x_lo = c.left, f.x_hi = c.right, f.y_lo = c.bottom, f.y_hi = c.top;
  init_field(f, c.ic2d, opt.gamma);
  EulerStats es;
  WenoStats ws;
  const auto t0 = Clock::now();
  while (!done(f.t, T)) {
    const double dt = rk3 ? compute_dt_unsplit(f, s.cfl, opt.gamma) : compute_dt_split(f, s.cfl, opt.gamma);
    const double tau = clip_step(dt, f.t, T);
    if (rk3) step_weno_rk3_2d(f, tau, s, opt, &ws);
    else step_2d(f, tau, s, opt, &es, order);
    ++rep.steps;
  }
  rep.wall_seconds = seconds_since(t0);
  if (rk3) {
    rep.counters.faces = ws.faces;
    rep.counters.fallbacks = ws.fallbacks;
  } else {
    rep.counters.faces = es.faces;
    rep.counters.fallbacks = es.fallbacks;
    rep.counters.clamps = es.kernel.clamps;
    rep.counters.splits = es.kernel.splits;
    for (int k = 0; k < 7; ++k) rep.counters.options[k] = es.options[k];
  }
  rep.cells_x = nx, rep.cells_y = ny;
  rep.points_x = f.mx, rep.points_y = f.my;
  rep.field2d = std::move(f);
}

std::string file_stem(const RunReport& r) {
  std::ostringstream os;
  os << r.case_name << '_' << to_string(r.scheme) << r.order << "_N" << r.cells_x;
  if (r.cells_y > 0) os << 'x' << r.cells_y;
  return os.str();
}

}  // namespace

double effective_cfl(const CaseSpec& c, const SchemeConfig& s) {
  if (s.cfl > 0.0) return s.cfl;
  if (c.cfl > 0.0 && s.scheme != Scheme::weno_rk3) return c.cfl;
  return SchemeConfig::default_cfl(s.scheme);
}

int cells_for_resolution(Scheme s, int resolution) {
  const int n = s == Scheme::cfweno ? resolution / 2 : resolution;
  if (n < 1) throw ConfigError("grid resolution too small");
  return n;
}

std::vector<double> reference_averages(const CaseSpec& c, int n, double t, const RunConfig& cfg) {
  switch (c.reference) {
    case ReferenceKind::exact_shift: {
      const double L = c.x1 - c.x0;
      const double shift = std::fmod(c.flux.speed * t, L);
      std::vector<double> breaks;
      std::vector<double> jumps = c.breakpoints;
      jumps.push_back(c.x0);
      for (double b : jumps)
        for (int k = -2; k <= 2; ++k) breaks.push_back(b + shift + k * L);
      auto f = [&](double x) { return c.scalar_ic(wrap(x - shift, c.x0, L)); };
      return cell_averages(f, c.x0, c.x1, n, breaks);
    }
    case ReferenceKind::characteristics: {
      auto f = [&](double x) { return burgers_characteristic_value(c.scalar_ic, x, t); };
      return cell_averages(f, c.x0, c.x1, n);
    }
    case ReferenceKind::exact_riemann: {
      const auto sol = exact_riemann(c.euler_ic(c.x0), c.euler_ic(c.x1), c.gamma);
      std::vector<double> out(n);
      const double h = (c.x1 - c.x0) / n;
      for (int i = 0; i < n; ++i)
        out[i] = riemann_cell_average_primitive(sol, c.riemann_x0, t, c.x0 + i * h, c.x0 + (i + 1) * h).rho;
      return out;
    }
    case ReferenceKind::fine_grid:
      return restrict_average(fine_grid_density(c, t, cfg), c.x0, c.x1, n);
    case ReferenceKind::none:
      break;
  }
  throw ConfigError("case '" + c.name + "' has no reference solution");
}

RunReport run_case(const RunConfig& cfg) {
  const CaseSpec& c = find_case(cfg.case_name);
  SchemeConfig s = cfg.scheme;
  s.cfl = effective_cfl(c, s);
  s.validate();
  EulerOptions opt = cfg.euler;
  opt.gamma = c.gamma;
  const double T = cfg.t_end >= 0.0 ? cfg.t_end : c.t_end;
  const int gx = cfg.grid_x > 0 ? cfg.grid_x : c.grid_x;
  const int gy = cfg.grid_y > 0 ? cfg.grid_y : c.grid_y;

  RunReport rep;
  rep.case_name = c.name;
  rep.scheme = s.scheme;
  rep.order = s.order;
  rep.cfl = s.cfl;
  rep.iterations = s.iterations;
  rep.t_end = T;

  switch (c.kind) {
    case CaseKind::scalar: run_scalar(c, s, T, rep, gx); break;
    case CaseKind::euler1d: run_euler1d(c, s, opt, T, rep, gx); break;
    case CaseKind::euler2d: run_euler2d(c, s, opt, T, cfg.sweep, rep, gx, gy); break;
  }

  if (cfg.reference && c.reference != ReferenceKind::none && c.dimension == 1) {
    rep.reference = reference_averages(c, rep.cells_x, T, cfg);
    rep.errors = error_norms(rep.field, rep.reference, (c.x1 - c.x0) / rep.cells_x);
  }

  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    const std::string stem = (fs::path(cfg.out_dir) / file_stem(rep)).string();
    if (rep.field2d) {
      write_field_dump(stem + ".dat", *rep.field2d, c.gamma);
      rep.files.push_back(stem + ".dat");
    } else {
      write_csv(stem + ".csv", rep);
      rep.files.push_back(stem + ".csv");
    }
    rep.files.push_back(stem + ".json");
    std::ofstream(stem + ".json") << rep.to_json().dump(2) << '\n';
  }
  return rep;
}

void write_csv(const std::string& path, const RunReport& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(15);
  const bool euler = !r.states.empty();
  const bool ref = !r.reference.empty();
  out << (euler ? "x,rho,u,p" : "x,u") << (ref ? (euler ? ",rho_ref" : ",u_ref") : "") << '\n';
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    out << r.x[i];
    if (euler) out << ',' << r.states[i].rho << ',' << r.states[i].u << ',' << r.states[i].p;
    else out << ',' << r.field[i];
    if (ref) out << ',' << r.reference[i];
    out << '\n';
  }
}

void write_field_dump(const std::string& path, const Field2D& f, double gamma) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(12);
  out << f.mx << ' ' << f.my << ' ' << f.x0 << ' ' << f.x1 << ' ' << f.y0 << ' ' << f.y1 << '\n';
  for (int q = 0; q < 4; ++q) {
    for (int j = 0; j < f.my; ++j) {
      for (int i = 0; i < f.mx; ++i) {
        const Primitive w = to_primitive(f.at(i, j), gamma);
        const double v = q == 0 ? w.rho : q == 1 ? w.u : q == 2 ? w.v : w.p;
        out << (i ? " " : "") << v;
      }
      out << '\n';
    }
  }
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["case"] = case_name;
  j["scheme"] = to_string(scheme);
  j["order"] = order;
  j["cfl"] = cfl;
  j["iterations"] = iterations;
  j["cells"] = cells_y > 0 ? nlohmann::json{cells_x, cells_y} : nlohmann::json(cells_x);
  j["points"] = points_y > 0 ? nlohmann::json{points_x, points_y} : nlohmann::json(points_x);
  j["t_end"] = t_end;
  j["steps"] = steps;
  j["wall_seconds"] = wall_seconds;
  if (errors) j["errors"] = {{"field", error_field}, {"l1", errors->l1}, {"l2", errors->l2}, {"linf", errors->linf}};
  nlohmann::json cnt;
  cnt["faces"] = counters.faces;
  cnt["shock_faces"] = counters.shock_faces;
  cnt["clamps"] = counters.clamps;
  cnt["negative_weight_splits"] = counters.splits;
  cnt["fallbacks"] = counters.fallbacks;
  cnt["options"] = std::vector<long long>(counters.options + 1, counters.options + 7);
  j["counters"] = cnt;
  j["files"] = files;
  return j;
}

}  // namespace cfweno
