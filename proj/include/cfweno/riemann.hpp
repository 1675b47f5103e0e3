#pragma once

#include "cfweno/euler.hpp"

namespace cfweno {

// Exact solution of the 1D Riemann problem for an ideal gas. The tangential
// velocity is carried by the contact.
struct RiemannSolution {
  Primitive left;
  Primitive right;
  double gamma = kGammaAir;
  double p_star = 0.0;
  double u_star = 0.0;
  int iterations = 0;
  double residual = 0.0;

  [[nodiscard]] bool left_shock() const { return p_star > left.p; }
  [[nodiscard]] bool right_shock() const { return p_star > right.p; }

  // State at x / t = xi.
  [[nodiscard]] Primitive sample(double xi) const;
};

// Newton iteration on the pressure function to |f(p)| <= 1e-12 (scaled).
// Throws std::domain_error if the data generate vacuum.
RiemannSolution exact_riemann(const Primitive& left, const Primitive& right, double gamma = kGammaAir);

// Mean over [a, b] of the sampled solution at time t with the discontinuity
// initially at x0 (Gauss-Legendre on each smooth piece).
Primitive riemann_cell_average_primitive(const RiemannSolution& s, double x0, double t, double a, double b);

}  // namespace cfweno
