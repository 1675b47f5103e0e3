#pragma once

#include <string>

#include "cfweno/grid.hpp"
#include "cfweno/reconstruction.hpp"
#include "cfweno/types.hpp"

namespace cfweno {

struct ScalarFlux {
  enum class Kind { linear, burgers };
  Kind kind = Kind::linear;
  double speed = 1.0;  // linear advection speed

  [[nodiscard]] double f(double u) const { return kind == Kind::linear ? speed * u : 0.5 * u * u; }
  [[nodiscard]] double df(double u) const { return kind == Kind::linear ? speed : u; }

  static ScalarFlux linear(double a = 1.0) { return {Kind::linear, a}; }
  static ScalarFlux burgers() { return {Kind::burgers, 1.0}; }
  static ScalarFlux from_name(const std::string& name);
};

struct SchemeConfig {
  Scheme scheme = Scheme::cfweno;
  int order = 5;
  double cfl = 0.9;
  int iterations = 0;
  Weighting weighting = Weighting::nonlinear;
  bool alternate_sweeps = false;
  int threads = 0;  // 0 keeps the OpenMP default; 1 runs the serial loops

  [[nodiscard]] int r() const { return order_to_r(order); }
  [[nodiscard]] Layout layout() const { return scheme == Scheme::cfweno ? Layout::compact : Layout::nodes; }
  void validate() const;
  static double default_cfl(Scheme s) { return s == Scheme::weno_rk3 ? 0.6 : 0.9; }
};

// (a, f*) with f(u) ~ a u - f*.
struct LinearizedFlux {
  double a = 0.0;
  double f_star = 0.0;
};

// Shock branch when f'(uL) > f'(uR); otherwise the linearization about u_star.
LinearizedFlux linearize_flux_scalar(double u_left, double u_right, double u_star,
                                     const ScalarFlux& flux, double tau, double h);

struct InterfaceResult {
  double flux = 0.0;       // a * ubar - f*
  double half_value = 0.0;  // foot value stored at the interface
  double a = 0.0;
  double f_star = 0.0;
  bool shock_branch = false;
};

using ScalarGrid = LineGrid<double>;

// Grid with ghost layers sized for the scheme.
ScalarGrid make_scalar_grid(const SchemeConfig& cfg, int n, double x0, double x1, Boundary left,
                            Boundary right);

double compute_dt(const ScalarGrid& g, const ScalarFlux& flux, double cfl);

void fill_scalar_ghosts(ScalarGrid& g, const std::function<double(double, double, bool)>& inflow = {});

// Interface between node i - 1 and node i (face index i = 0 .. n) for the
// one-step schemes. Ghosts must be filled.
InterfaceResult scalar_interface(const ScalarGrid& g, int face, double tau, const SchemeConfig& cfg,
                                 const ScalarFlux& flux, KernelStats* stats = nullptr);

// Linearization iterate a^(k) at one face (k = 0 is the baseline: Roe speed
// on a compressive face, the midpoint otherwise).
LinearizedFlux fixed_point_eigenvalue(const ScalarGrid& g, int face, double tau, const SchemeConfig& cfg,
                                      const ScalarFlux& flux, int k);

struct StepStats {
  KernelStats kernel;
  long long shock_faces = 0;
  long long faces = 0;

  StepStats& operator+=(const StepStats& o) {
    kernel += o.kernel;
    shock_faces += o.shock_faces;
    faces += o.faces;
    return *this;
  }
};

// One step of CFWENO (compact grid) or FWENO (node grid). Fills ghosts first.
void step_scalar(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux,
                 StepStats* stats = nullptr,
                 const std::function<double(double, double, bool)>& inflow = {});

// Serial reference for step_scalar; identical arithmetic without OpenMP.
void step_scalar_serial(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux,
                        StepStats* stats = nullptr,
                        const std::function<double(double, double, bool)>& inflow = {});

}  // namespace cfweno
