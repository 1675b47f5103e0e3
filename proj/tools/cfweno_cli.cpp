// Command-line front end: run, convergence, bench, derive-coefficients.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>
#include <tuple>

#include "cfweno/analysis.hpp"
#include "cfweno/derivation.hpp"
#include "cfweno/runner.hpp"

using namespace cfweno;

namespace {

constexpr int kExitFailure = 2;  // positivity or CFL
constexpr int kExitConfig = 3;

struct Options {
  std::string case_name = "sod";
  std::string scheme = "cfweno";
  int order = 5;
  std::vector<std::string> grid;
  double cfl = 0.0;
  double t_end = -1.0;
  int iterations = 0;
  std::string sweep = "fixed";
  std::string weighting = "nonlinear";
  std::string middle_pressure = "printed";
  std::string out;
  int threads = 0;
  int reference_cells = 10000;
  std::string cache_dir = ".cfweno-cache";
  bool no_reference = false;
  bool json = false;
};

Scheme parse_scheme(const std::string& s) {
  if (s == "cfweno") return Scheme::cfweno;
  if (s == "fweno") return Scheme::fweno;
  if (s == "weno-rk3" || s == "weno_rk3" || s == "wenork3") return Scheme::weno_rk3;
  throw ConfigError("unknown scheme '" + s + "'");
}

// "N" or "NXxNY".
std::pair<int, int> parse_grid(const std::string& s) {
  try {
    const auto x = s.find('x');
    if (x == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw ConfigError("bad grid '" + s + "'");
  }
}

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  cfg.case_name = o.case_name;
  find_case(o.case_name);
  cfg.scheme.scheme = parse_scheme(o.scheme);
  cfg.scheme.order = o.order;
  cfg.scheme.cfl = o.cfl;
  cfg.scheme.iterations = o.iterations;
  cfg.scheme.threads = o.threads;
  if (o.weighting == "linear") cfg.scheme.weighting = Weighting::linear;
  else if (o.weighting != "nonlinear") throw ConfigError("weighting must be nonlinear or linear");
  if (o.sweep == "alternate") cfg.sweep = SweepOrder::alternate;
  else if (o.sweep != "fixed") throw ConfigError("sweep-order must be fixed or alternate");
  if (o.middle_pressure == "consistent") cfg.euler.middle_pressure = MiddlePressureForm::consistent;
  else if (o.middle_pressure != "printed") throw ConfigError("middle-pressure must be printed or consistent");
  cfg.t_end = o.t_end;
  cfg.reference = !o.no_reference;
  cfg.reference_cells = o.reference_cells;
  cfg.cache_dir = o.cache_dir;
  cfg.out_dir = o.out;
  if (!o.grid.empty()) std::tie(cfg.grid_x, cfg.grid_y) = parse_grid(o.grid.front());
  if (cfg.scheme.iterations < 0) throw ConfigError("iterations must be non-negative");
  order_to_r(cfg.scheme.order);
  return cfg;
}

void print_summary(const RunReport& r) {
  std::printf("case %s  scheme %s%d  cfl %.3g  iterations %d\n", r.case_name.c_str(), to_string(r.scheme),
              r.order, r.cfl, r.iterations);
  if (r.cells_y > 0)
    std::printf("cells %d x %d  stored points %d x %d\n", r.cells_x, r.cells_y, r.points_x, r.points_y);
  else
    std::printf("cells %d  stored points %d\n", r.cells_x, r.points_x);
  std::printf("t %.6g  steps %lld  solver time %.3f s\n", r.t_end, r.steps, r.wall_seconds);
  if (r.errors)
    std::printf("error (%s)  L1 %.6e  L2 %.6e  Linf %.6e\n", r.error_field.c_str(), r.errors->l1, r.errors->l2,
                r.errors->linf);
  const auto& c = r.counters;
  std::printf("faces %lld  clamps %lld  splits %lld  fallbacks %lld", c.faces, c.clamps, c.splits, c.fallbacks);
  if (c.shock_faces) std::printf("  shock faces %lld", c.shock_faces);
  if (std::any_of(c.options + 1, c.options + 7, [](long long v) { return v > 0; }))
    std::printf("  options [%lld %lld %lld %lld %lld %lld]", c.options[1], c.options[2], c.options[3],
                c.options[4], c.options[5], c.options[6]);
  std::printf("\n");
  for (const auto& f : r.files) std::printf("wrote %s\n", f.c_str());
}

int cmd_run(const Options& o) {
  const RunReport r = run_case(make_config(o));
  if (o.json) std::cout << r.to_json().dump(2) << '\n';
  else print_summary(r);
  return 0;
}

int cmd_convergence(const Options& o) {
  RunConfig base = make_config(o);
  const CaseSpec& c = find_case(base.case_name);
  if (c.dimension != 1 || c.reference == ReferenceKind::none)
    throw ConfigError("convergence needs a 1D case with a reference solution");
  std::vector<int> grids;
  for (const auto& g : o.grid) grids.push_back(parse_grid(g).first);
  if (grids.empty()) grids = {20, 40, 80, 160, 320};
  std::sort(grids.begin(), grids.end());

  // Rungs run concurrently; each gets a share of the hardware threads.
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  const int share = std::max(1, hw / static_cast<int>(grids.size()));
  std::vector<std::future<RunReport>> futures;
  for (int n : grids) {
    RunConfig cfg = base;
    cfg.grid_x = n;
    cfg.out_dir.clear();
    if (cfg.scheme.threads == 0) cfg.scheme.threads = share;
    futures.push_back(std::async(std::launch::async, [cfg] { return run_case(cfg); }));
  }
  std::vector<RunReport> reports;
  for (auto& f : futures) reports.push_back(f.get());

  std::vector<double> l1, l2, li, hs;
  for (const auto& r : reports) {
    l1.push_back(r.errors->l1);
    l2.push_back(r.errors->l2);
    li.push_back(r.errors->linf);
    hs.push_back((c.x1 - c.x0) / r.cells_x);
  }
  const auto o1 = convergence_orders(l1, hs), o2 = convergence_orders(l2, hs), oi = convergence_orders(li, hs);
  nlohmann::json j;
  j["case"] = c.name;
  j["scheme"] = to_string(base.scheme.scheme);
  j["order"] = base.scheme.order;
  j["iterations"] = base.scheme.iterations;
  std::printf("%s  %s%d  iterations %d  cfl %.3g\n", c.name.c_str(), to_string(base.scheme.scheme),
              base.scheme.order, base.scheme.iterations, reports.front().cfl);
  std::printf("%8s %14s %8s %14s %8s %14s %8s\n", "N", "L1", "order", "L2", "order", "Linf", "order");
  auto fmt = [](const std::optional<double>& v) {
    char b[16];
    if (v) std::snprintf(b, sizeof b, "%8.2f", *v);
    else std::snprintf(b, sizeof b, "%8s", "-");
    return std::string(b);
  };
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const std::optional<double> none;
    const auto& a = k ? o1[k - 1] : none;
    const auto& b = k ? o2[k - 1] : none;
    const auto& d = k ? oi[k - 1] : none;
    std::printf("%8d %14.6e %s %14.6e %s %14.6e %s\n", reports[k].cells_x, l1[k], fmt(a).c_str(), l2[k],
                fmt(b).c_str(), li[k], fmt(d).c_str());
    nlohmann::json row = reports[k].to_json();
    if (k) row["order_l2"] = b ? nlohmann::json(*b) : nlohmann::json();
    j["runs"].push_back(row);
  }
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    const auto path = std::filesystem::path(o.out) / (c.name + "_convergence.json");
    std::ofstream(path) << j.dump(2) << '\n';
    std::printf("wrote %s\n", path.string().c_str());
  }
  if (o.json) std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_bench(const Options& o, int repeat) {
  RunConfig base = make_config(o);
  base.reference = false;
  base.out_dir.clear();
  const CaseSpec& c = find_case(base.case_name);
  const Scheme schemes[] = {Scheme::cfweno, Scheme::fweno, Scheme::weno_rk3};
  double best[3];
  nlohmann::json j;
  for (int s = 0; s < 3; ++s) {
    RunConfig cfg = base;
    cfg.scheme.scheme = schemes[s];
    cfg.scheme.cfl = o.cfl > 0.0 ? (schemes[s] == Scheme::weno_rk3 ? std::min(o.cfl, 0.6) : o.cfl) : 0.0;
    best[s] = 1e300;
    RunReport r;
    for (int k = 0; k < std::max(1, repeat); ++k) {
      r = run_case(cfg);
      best[s] = std::min(best[s], r.wall_seconds);
    }
    std::printf("%-9s order %d  cells %d%s  steps %lld  best %.4f s\n", to_string(schemes[s]), cfg.scheme.order,
                r.cells_x, r.cells_y ? ("x" + std::to_string(r.cells_y)).c_str() : "", r.steps, best[s]);
    j["runs"].push_back(r.to_json());
  }
  const int order = base.scheme.order;
  std::printf("cfweno / fweno     measured %.3f  predicted cost ratio %.3f\n", best[0] / best[1],
              predicted_cost_ratio(Scheme::cfweno, Scheme::fweno, order, c.dimension));
  std::printf("cfweno / weno-rk3  measured %.3f  predicted cost ratio %.3f\n", best[0] / best[2],
              predicted_cost_ratio(Scheme::cfweno, Scheme::weno_rk3, order, c.dimension));
  std::printf("normalized Q_e: cfweno %.2f  fweno %.2f  weno-rk3 %.2f\n", normalized_speed(Scheme::cfweno, order),
              normalized_speed(Scheme::fweno, order), normalized_speed(Scheme::weno_rk3, order));
  j["ratio_cfweno_fweno"] = best[0] / best[1];
  j["ratio_cfweno_weno_rk3"] = best[0] / best[2];
  if (o.json) std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_derive(const std::string& format, const std::string& out) {
  const auto sets = exact::derive_all();
  std::string text;
  if (format == "header") text = exact::emit_frozen_header(sets);
  else if (format == "text") text = exact::format_tables_text(sets);
  else throw ConfigError("format must be header or text");
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write " + out);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact fully-discrete WENO solvers and benchmark harness"};
  app.set_config("--config", "", "key=value file mirroring the flags (flags win)");
  app.require_subcommand(1);
  Options o;
  app.add_option("--case", o.case_name, "case name")->capture_default_str();
  app.add_option("--scheme", o.scheme, "cfweno | fweno | weno-rk3")->capture_default_str();
  app.add_option("--order", o.order, "3, 5 or 7")->capture_default_str();
  app.add_option("--grid", o.grid, "cells (1D) or resolution NXxNY (2D); a list for convergence")
      ->delimiter(',');
  app.add_option("--cfl", o.cfl, "CFL number (default per case and scheme)");
  app.add_option("--tend", o.t_end, "end time (default per case)");
  app.add_option("--iterations", o.iterations, "flux iterations")->capture_default_str();
  app.add_option("--sweep-order", o.sweep, "fixed | alternate")->capture_default_str();
  app.add_option("--weighting", o.weighting, "nonlinear | linear")->capture_default_str();
  app.add_option("--middle-pressure", o.middle_pressure, "printed | consistent")->capture_default_str();
  app.add_option("--out", o.out, "output directory");
  app.add_option("--threads", o.threads, "OpenMP threads (0: CFWENO_THREADS or the OpenMP default)");
  app.add_option("--reference-cells", o.reference_cells, "fine-grid reference cells")->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "fine-grid reference cache")->capture_default_str();
  app.add_flag("--no-reference", o.no_reference, "skip the reference solution");
  app.add_flag("--json", o.json, "print the JSON report");

  auto* run = app.add_subcommand("run", "run one case");
  auto* conv = app.add_subcommand("convergence", "grid-refinement ladder with observed orders");
  auto* bench = app.add_subcommand("bench", "wall time of the three schemes on one case");
  int repeat = 3;
  bench->add_option("--repeat", repeat, "runs per scheme; the fastest counts")->capture_default_str();
  auto* derive = app.add_subcommand("derive-coefficients", "print the exact stencil tables");
  std::string format = "header", derive_out;
  derive->add_option("--format", format, "header | text")->capture_default_str();
  derive->add_option("--output", derive_out, "file instead of stdout");
  for (auto* s : {run, conv, bench, derive}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(o);
    if (*conv) return cmd_convergence(o);
    if (*bench) return cmd_bench(o, repeat);
    if (*derive) return cmd_derive(format, derive_out.empty() && !o.out.empty() ? o.out : derive_out);
  } catch (const PositivityFailure& e) {
    std::fprintf(stderr, "positivity failure: %s\n", e.what());
    return kExitFailure;
  } catch (const CflViolation& e) {
    std::fprintf(stderr, "CFL violation: %s\n", e.what());
    return kExitFailure;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  }
  return 0;
}
