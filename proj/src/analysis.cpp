#include "cfweno/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace cfweno {

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> reference, double h) {
  if (numeric.size() != reference.size()) throw std::invalid_argument("error_norms: length mismatch");
  ErrorNorms n;
  double sq = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - reference[i]);
    n.l1 += e * h;
    sq += e * e * h;
    n.linf = std::max(n.linf, e);
  }
  n.l2 = std::sqrt(sq);
  return n;
}

std::vector<std::optional<double>> convergence_orders(std::span<const double> errors, std::span<const double> hs) {
  if (errors.size() != hs.size()) throw std::invalid_argument("convergence_orders: length mismatch");
  std::vector<std::optional<double>> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (errors[k] > 0.0 && errors[k + 1] > 0.0 && hs[k] > 0.0 && hs[k + 1] > 0.0 && hs[k] != hs[k + 1])
      out.emplace_back(std::log(errors[k] / errors[k + 1]) / std::log(hs[k] / hs[k + 1]));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

double error_coefficient(Scheme scheme, int order, double nu) {
  const int r = order_to_r(order);
  const double v = nu;
  switch (scheme) {
    case Scheme::cfweno: {
      const double base = v * (1 - v) * (1 - v);
      if (r == 2) return base / 4.0;
      if (r == 3) return base * (1 + v) * (2 - v) / 36.0;
      return base * (1 + v) * (1 + v) * (2 - v) * (2 - v) / 576.0;
    }
    case Scheme::fweno: {
      if (r == 2) return (1 - v * v) * (2 - v) / 24.0;
      if (r == 3) return (1 - v * v) * (4 - v * v) * (3 - v) / 720.0;
      return (1 - v * v) * (4 - v * v) * (9 - v * v) * (4 - v) / 40320.0;
    }
    case Scheme::weno_rk3:
      if (r == 2) return 2.0 / 24.0;
      if (r == 3) return 12.0 / 720.0;
      return 144.0 / 40320.0;
  }
  return 0.0;
}

SpeedParameters speed_parameters(Scheme scheme, int order) {
  const int r = order_to_r(order);
  SpeedParameters p;
  switch (scheme) {
    case Scheme::cfweno:
      p.spacing = 2.0;
      p.cost = r == 2 ? 1.71 : (r == 3 ? 1.47 : 1.31);
      break;
    case Scheme::fweno:
      p.cost = r == 2 ? 1.29 : (r == 3 ? 1.10 : 0.97);
      break;
    case Scheme::weno_rk3:
      p.stages = 3;
      p.cfl = 0.6;
      p.cost = 1.0;
      break;
  }
  return p;
}

double predicted_speed(Scheme scheme, int order) {
  const auto p = speed_parameters(scheme, order);
  return p.spacing * (p.spacing * p.cfl) / (p.cost * p.stages);
}

double normalized_speed(Scheme scheme, int order) {
  return predicted_speed(scheme, order) / predicted_speed(Scheme::weno_rk3, order);
}

double cost_per_step(Scheme scheme, int order, int dimension, long long n) {
  if (dimension < 1 || dimension > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  const auto p = speed_parameters(scheme, order);
  const double nd = static_cast<double>(n);
  double points = std::pow(nd, dimension);
  if (scheme == Scheme::cfweno) points = nd * std::pow(2.0 * nd - 1.0, dimension - 1);
  return points * p.cost * p.stages;
}

double predicted_cost_ratio(Scheme a, Scheme b, int order, int dimension) {
  const auto pa = speed_parameters(a, order);
  const auto pb = speed_parameters(b, order);
  const double fa = a == Scheme::cfweno ? std::pow(2.0, dimension - 1) : 1.0;
  const double fb = b == Scheme::cfweno ? std::pow(2.0, dimension - 1) : 1.0;
  return (fa * pa.cost * pa.stages) / (fb * pb.cost * pb.stages);
}

}  // namespace cfweno
