#pragma once

// Runs a registered case with one scheme and collects errors, timing and
// scheme counters.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfweno/analysis.hpp"
#include "cfweno/cases.hpp"
#include "cfweno/multidim.hpp"

namespace cfweno {

struct RunConfig {
  std::string case_name;
  SchemeConfig scheme = [] {
    SchemeConfig s;
    s.cfl = 0.0;  // case or scheme default
    return s;
  }();
  int grid_x = 0;        // 0 keeps the case default
  int grid_y = 0;
  double t_end = -1.0;   // negative keeps the case default
  SweepOrder sweep = SweepOrder::fixed;
  EulerOptions euler;
  bool reference = true;
  int reference_cells = 10000;
  std::string cache_dir = ".cfweno-cache";
  std::string out_dir;  // empty: no files
};

struct RunCounters {
  long long faces = 0;
  long long shock_faces = 0;  // scalar Roe-branch faces
  long long clamps = 0;
  long long splits = 0;
  long long options[7] = {0, 0, 0, 0, 0, 0, 0};
  long long fallbacks = 0;
};

struct RunReport {
  std::string case_name;
  Scheme scheme = Scheme::cfweno;
  int order = 5;
  double cfl = 0.0;
  int iterations = 0;
  int cells_x = 0, cells_y = 0;
  int points_x = 0, points_y = 0;
  double t_end = 0.0;
  long long steps = 0;
  double wall_seconds = 0.0;  // stepping only

  std::optional<ErrorNorms> errors;
  std::string error_field;  // "u" or "rho"
  RunCounters counters;
  std::vector<std::string> files;

  // Final node data (1D): centers, the error field and its reference.
  std::vector<double> x;
  std::vector<double> field;
  std::vector<double> reference;
  std::vector<Primitive> states;  // Euler only
  std::optional<Field2D> field2d;

  [[nodiscard]] nlohmann::json to_json() const;
};

// Effective CFL: the explicit value, else the case value for one-step
// schemes, else the scheme default.
double effective_cfl(const CaseSpec& c, const SchemeConfig& s);

// 2D cells per direction for a lattice resolution: CFWENO stores 2n + 1
// points per direction, so it takes res / 2 cells; the others take res.
int cells_for_resolution(Scheme s, int resolution);

// Reference cell averages (u, or density for Euler) at time t on n cells.
// Fine-grid references are cached under cfg.cache_dir.
std::vector<double> reference_averages(const CaseSpec& c, int n, double t, const RunConfig& cfg);

RunReport run_case(const RunConfig& cfg);

// Files written by run_case.
void write_csv(const std::string& path, const RunReport& r);
void write_field_dump(const std::string& path, const Field2D& f, double gamma);

}  // namespace cfweno
