#pragma once

// Registry of the benchmark problems.

#include <functional>
#include <string>
#include <vector>

#include "cfweno/euler.hpp"
#include "cfweno/grid.hpp"
#include "cfweno/scalar.hpp"

namespace cfweno {

enum class CaseKind { scalar, euler1d, euler2d };

enum class ReferenceKind {
  none,
  exact_shift,       // linear advection, periodic
  characteristics,   // smooth Burgers before breaking
  exact_riemann,     // 1D Riemann problem
  fine_grid,         // WENO5-JS + RK3 on a fine grid
};

struct CaseSpec {
  std::string name;
  std::string title;
  CaseKind kind = CaseKind::scalar;
  int dimension = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  Boundary left = Boundary::periodic, right = Boundary::periodic;
  Boundary bottom = Boundary::periodic, top = Boundary::periodic;
  double t_end = 1.0;
  // Nodes per direction (1D: cells; 2D: lattice resolution as printed).
  int grid_x = 100, grid_y = 1;
  double cfl = 0.0;  // 0 keeps the scheme default
  ScalarFlux flux = ScalarFlux::linear();
  double gamma = kGammaAir;

  std::function<double(double)> scalar_ic;
  std::function<Primitive(double)> euler_ic;
  std::function<Primitive(double, double)> ic2d;
  // Jumps of the 1D initial data, used to split quadrature.
  std::vector<double> breakpoints;

  ReferenceKind reference = ReferenceKind::none;
  double riemann_x0 = 0.5;
  std::string note;
};

const std::vector<CaseSpec>& case_registry();

// Throws ConfigError for an unknown name.
const CaseSpec& find_case(const std::string& name);

std::vector<std::string> case_names();

// Cell averages of a 1D scalar function with jumps at `breaks`.
std::vector<double> cell_averages(const std::function<double(double)>& f, double x0, double x1, int n,
                                  const std::vector<double>& breaks = {});

// Conservative cell averages of a 1D primitive-state function.
std::vector<Cons<3>> cell_averages_euler(const std::function<Primitive(double)>& f, double x0, double x1, int n,
                                         const std::vector<double>& breaks, double gamma);

// Initial grids: nodes hold cell averages, half points the pointwise value.
// At a jump the point value follows the case's inequalities.
void init_scalar_grid(ScalarGrid& g, const CaseSpec& c);
void init_euler_grid(EulerGrid<3>& g, const CaseSpec& c);

// Burgers solution at (x, t) from u = u0(x - u t) by Newton iteration.
double burgers_characteristic_value(const std::function<double(double)>& u0, double x, double t);

}  // namespace cfweno
