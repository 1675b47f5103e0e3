#pragma once

// Semi-discrete WENO-JS with a Roe flux and TVD-RK3 time stepping.

#include <span>
#include <utility>
#include <vector>

#include "cfweno/euler.hpp"
#include "cfweno/scalar.hpp"

namespace cfweno {

inline constexpr double kEntropyFixFraction = 0.1;

// Interface values at x_{i+1/2} from 2r nodes i-r+1 .. i+r: the left-biased
// value u^- and the right-biased value u^+.
std::pair<double, double> weno_js_reconstruct(int r, std::span<const double> nodes);

// Left-biased value only, from the 2r-1 nodes centered on node i.
double weno_js_value(int r, std::span<const double> window);

// Roe flux with Harten's entropy fix, delta = max(0, a - f'(uL), f'(uR) - a).
double roe_flux_entropy_fix(double u_left, double u_right, const ScalarFlux& flux);

// Roe flux with Harten's entropy fix on the acoustic fields, delta = fraction * c.
template <std::size_t NC>
Cons<NC> roe_flux_entropy_fix(const Cons<NC>& UL, const Cons<NC>& UR, double gamma = kGammaAir,
                              double fraction = kEntropyFixFraction);

// -d/dx of the numerical flux at every node (ghosts must be filled).
void weno_residual_scalar(const ScalarGrid& g, int r, const ScalarFlux& flux, std::vector<double>& out);

struct WenoStats {
  long long faces = 0;
  long long fallbacks = 0;  // inadmissible reconstructed state, node values used

  WenoStats& operator+=(const WenoStats& o) {
    faces += o.faces;
    fallbacks += o.fallbacks;
    return *this;
  }
};

// Characteristic-wise residual of one line; `parallel` splits faces over threads.
template <std::size_t NC>
void weno_residual_euler(const EulerGrid<NC>& g, int r, double gamma, std::vector<Cons<NC>>& out,
                         WenoStats* stats = nullptr, bool parallel = false, int threads = 0);

// u1 = u + tau L(u); u2 = u + tau (L1 + L2) / 4; u^{n+1} = u + tau (L1 + L2 + 4 L3) / 6.
void step_weno_rk3_scalar(ScalarGrid& g, double tau, const SchemeConfig& cfg, const ScalarFlux& flux,
                          const std::function<double(double, double, bool)>& inflow = {});

void step_weno_rk3_euler(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
                         WenoStats* stats = nullptr, const EulerInflow<3>& inflow = {});

}  // namespace cfweno
