#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cfweno/types.hpp"

namespace cfweno {

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

// L1 = sum |e| h, L2 = sqrt(sum e^2 h), Linf = max |e|. Throws
// std::invalid_argument on a length mismatch.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> reference, double h);

// log(e_k / e_{k+1}) / log(h_k / h_{k+1}); empty where an error is not positive.
std::vector<std::optional<double>> convergence_orders(std::span<const double> errors, std::span<const double> hs);

// Leading error coefficient C_e of the linear-flux truncation error.
double error_coefficient(Scheme scheme, int order, double nu);

// Computing-speed model: Q_e = Delta_e * Delta_t / (C_Q * P) with
// Delta_t = Delta_e * CFL (unit wave speed).
struct SpeedParameters {
  int stages = 1;          // P
  double spacing = 1.0;    // Delta_e
  double cfl = 0.9;
  double cost = 1.0;       // C_Q
};

SpeedParameters speed_parameters(Scheme scheme, int order);
double predicted_speed(Scheme scheme, int order);
// Q_e divided by the WENO+RK3 value.
double normalized_speed(Scheme scheme, int order);

// Work per step relative to n^dim * C_Q at equal spacing in the sweep
// direction: CFWENO carries n (2n - 1)^(dim - 1) points, WENO+RK3 pays P stages.
double cost_per_step(Scheme scheme, int order, int dimension, long long n);

// Predicted wall-time ratio of scheme a to scheme b at equal spacing for large n.
double predicted_cost_ratio(Scheme a, Scheme b, int order, int dimension);

}  // namespace cfweno
