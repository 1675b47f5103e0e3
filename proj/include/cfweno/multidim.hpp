#pragma once

// Two-dimensional Euler by dimension-by-dimension sweeps.
//
// CFWENO keeps a (2nx+1) x (2ny+1) lattice: odd (i, j) are cell averages,
// every other point is a point value. An x-sweep treats every lattice row as
// a compact 1D line, so half points get evolved in both directions. FWENO and
// WENO-RK3 use the plain nx x ny node grid.

#include <vector>

#include "cfweno/baselines.hpp"
#include "cfweno/euler.hpp"

namespace cfweno {

using Cons2 = Cons<4>;

struct Field2D {
  Layout layout = Layout::compact;
  int nx = 0, ny = 0;  // cells per direction
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  Boundary x_lo = Boundary::periodic, x_hi = Boundary::periodic;
  Boundary y_lo = Boundary::periodic, y_hi = Boundary::periodic;
  double t = 0.0;
  long long steps = 0;
  int mx = 0, my = 0;  // stored points per direction
  std::vector<Cons2> data;

  Field2D() = default;
  Field2D(Layout l, int cells_x, int cells_y, double ax, double bx, double ay, double by);

  Cons2& at(int i, int j) { return data[static_cast<std::size_t>(j) * mx + i]; }
  const Cons2& at(int i, int j) const { return data[static_cast<std::size_t>(j) * mx + i]; }

  [[nodiscard]] double hx() const { return (x1 - x0) / nx; }
  [[nodiscard]] double hy() const { return (y1 - y0) / ny; }
  [[nodiscard]] double x_point(int i) const {
    return layout == Layout::compact ? x0 + 0.5 * i * hx() : x0 + (i + 0.5) * hx();
  }
  [[nodiscard]] double y_point(int j) const {
    return layout == Layout::compact ? y0 + 0.5 * j * hy() : y0 + (j + 0.5) * hy();
  }
  [[nodiscard]] bool is_node(int i, int j) const {
    return layout == Layout::nodes || (i % 2 == 1 && j % 2 == 1);
  }
  void set_boundaries(Boundary x, Boundary y) {
    x_lo = x_hi = x;
    y_lo = y_hi = y;
  }
};

enum class Direction { x, y };

enum class SweepOrder { fixed, alternate };

// Samples an initial condition pointwise on every stored point. Set the
// boundaries first: periodic compact lattices copy the low wrap face to the high one.
void init_field(Field2D& f, const std::function<Primitive(double, double)>& ic, double gamma = kGammaAir);

// Single step size for both sweeps: cfl * min(hx / max(|u|+c), hy / max(|v|+c)).
double compute_dt_split(const Field2D& f, double cfl, double gamma = kGammaAir);

// Unsplit step size for WENO-RK3: cfl / (max(|u|+c)/hx + max(|v|+c)/hy).
double compute_dt_unsplit(const Field2D& f, double cfl, double gamma = kGammaAir);

// Copies line `index` of the field into a 1D grid in sweep coordinates
// (normal momentum first) with ghosts filled.
EulerGrid<4> extract_line(const Field2D& f, Direction d, int index, int ghosts);
void store_line(Field2D& f, Direction d, int index, const EulerGrid<4>& line);

// Applies T_x or T_y to every lattice row or column.
void sweep(Field2D& f, Direction d, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
           EulerStats* stats = nullptr);

// T_x then T_y; with SweepOrder::alternate odd steps run T_y first.
void step_2d(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
             EulerStats* stats = nullptr, SweepOrder order = SweepOrder::fixed);

void step_2d_serial(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
                    EulerStats* stats = nullptr, SweepOrder order = SweepOrder::fixed);

// Unsplit WENO-JS + RK3 step on a node field.
void step_weno_rk3_2d(Field2D& f, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
                      WenoStats* stats = nullptr);

// Throws PositivityFailure naming (i, j).
void check_positivity_2d(const Field2D& f, double gamma, const char* where = "");

}  // namespace cfweno
