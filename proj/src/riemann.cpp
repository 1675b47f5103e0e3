#include "cfweno/riemann.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cfweno {

namespace {

// Pressure function of one side and its derivative.
void side_function(double p, const Primitive& w, double gamma, double& f, double& df) {
  const double c = sound_speed(w, gamma);
  if (p > w.p) {
    const double A = 2.0 / ((gamma + 1.0) * w.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * w.p;
    const double s = std::sqrt(A / (p + B));
    f = (p - w.p) * s;
    df = s * (1.0 - 0.5 * (p - w.p) / (p + B));
  } else {
    const double z = (gamma - 1.0) / (2.0 * gamma);
    f = 2.0 * c / (gamma - 1.0) * (std::pow(p / w.p, z) - 1.0);
    df = 1.0 / (w.rho * c) * std::pow(p / w.p, -(gamma + 1.0) / (2.0 * gamma));
  }
}

}  // namespace

RiemannSolution exact_riemann(const Primitive& l, const Primitive& r, double gamma) {
  RiemannSolution s;
  s.left = l;
  s.right = r;
  s.gamma = gamma;
  const double cl = sound_speed(l, gamma);
  const double cr = sound_speed(r, gamma);
  if (2.0 * (cl + cr) / (gamma - 1.0) <= r.u - l.u) throw std::domain_error("Riemann data generate vacuum");

  const double du = r.u - l.u;
  auto F = [&](double p, double& dF) {
    double fl, dfl, fr, dfr;
    side_function(p, l, gamma, fl, dfl);
    side_function(p, r, gamma, fr, dfr);
    dF = dfl + dfr;
    return fl + fr + du;
  };

  // Two-rarefaction guess, always positive when there is no vacuum.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) / (cl / std::pow(l.p, z) + cr / std::pow(r.p, z)), 1.0 / z);
  const double scale = std::max({cl, cr, std::abs(l.u), std::abs(r.u)});
  double dF = 0.0;
  double res = F(p, dF);
  int it = 0;
  for (; it < 200 && std::abs(res) > 1e-12 * scale; ++it) {
    double next = p - res / dF;
    if (!(next > 0.0)) next = 0.5 * p;
    p = next;
    res = F(p, dF);
  }
  if (std::abs(res) > 1e-12 * scale) throw std::runtime_error("exact Riemann iteration did not converge");
  double fl, fr, d;
  side_function(p, l, gamma, fl, d);
  side_function(p, r, gamma, fr, d);
  s.p_star = p;
  s.u_star = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
  s.iterations = it;
  s.residual = res;
  return s;
}

Primitive RiemannSolution::sample(double xi) const {
  const double g = gamma;
  const double gm = g - 1.0, gp = g + 1.0;
  if (xi <= u_star) {
    const Primitive& w = left;
    const double c = sound_speed(w, g);
    if (p_star > w.p) {
      const double S = w.u - c * std::sqrt(gp / (2 * g) * p_star / w.p + gm / (2 * g));
      if (xi <= S) return w;
      const double ratio = p_star / w.p;
      return {w.rho * (ratio + gm / gp) / (gm / gp * ratio + 1.0), u_star, w.v, p_star};
    }
    const double head = w.u - c;
    if (xi <= head) return w;
    const double c_star = c * std::pow(p_star / w.p, gm / (2 * g));
    const double tail = u_star - c_star;
    if (xi >= tail) return {w.rho * std::pow(p_star / w.p, 1.0 / g), u_star, w.v, p_star};
    const double k = 2.0 / gp + gm / (gp * c) * (w.u - xi);
    return {w.rho * std::pow(k, 2.0 / gm), 2.0 / gp * (c + 0.5 * gm * w.u + xi), w.v,
            w.p * std::pow(k, 2.0 * g / gm)};
  }
  const Primitive& w = right;
  const double c = sound_speed(w, g);
  if (p_star > w.p) {
    const double S = w.u + c * std::sqrt(gp / (2 * g) * p_star / w.p + gm / (2 * g));
    if (xi >= S) return w;
    const double ratio = p_star / w.p;
    return {w.rho * (ratio + gm / gp) / (gm / gp * ratio + 1.0), u_star, w.v, p_star};
  }
  const double head = w.u + c;
  if (xi >= head) return w;
  const double c_star = c * std::pow(p_star / w.p, gm / (2 * g));
  const double tail = u_star + c_star;
  if (xi <= tail) return {w.rho * std::pow(p_star / w.p, 1.0 / g), u_star, w.v, p_star};
  const double k = 2.0 / gp - gm / (gp * c) * (w.u - xi);
  return {w.rho * std::pow(k, 2.0 / gm), 2.0 / gp * (-c + 0.5 * gm * w.u + xi), w.v,
          w.p * std::pow(k, 2.0 * g / gm)};
}

Primitive riemann_cell_average_primitive(const RiemannSolution& s, double x0, double t, double a, double b) {
  // Averages conserved quantities, then converts back.
  using Rule = boost::math::quadrature::gauss<double, 8>;
  std::vector<double> cuts{a, b};
  if (t > 0.0) {
    const Primitive& l = s.left;
    const Primitive& r = s.right;
    const double g = s.gamma;
    const double cl = sound_speed(l, g), cr = sound_speed(r, g);
    std::vector<double> speeds{s.u_star};
    if (s.left_shock()) {
      speeds.push_back(l.u - cl * std::sqrt((g + 1) / (2 * g) * s.p_star / l.p + (g - 1) / (2 * g)));
    } else {
      speeds.push_back(l.u - cl);
      speeds.push_back(s.u_star - cl * std::pow(s.p_star / l.p, (g - 1) / (2 * g)));
    }
    if (s.right_shock()) {
      speeds.push_back(r.u + cr * std::sqrt((g + 1) / (2 * g) * s.p_star / r.p + (g - 1) / (2 * g)));
    } else {
      speeds.push_back(r.u + cr);
      speeds.push_back(s.u_star + cr * std::pow(s.p_star / r.p, (g - 1) / (2 * g)));
    }
    for (double v : speeds) {
      const double x = x0 + v * t;
      if (x > a && x < b) cuts.push_back(x);
    }
  } else if (x0 > a && x0 < b) {
    cuts.push_back(x0);
  }
  std::sort(cuts.begin(), cuts.end());
  Cons<3> acc{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < Rule::abscissa().size(); ++q) {
      for (double sign : {-1.0, 1.0}) {
        const double x = mid + sign * half * Rule::abscissa()[q];
        const Primitive w = t > 0.0 ? s.sample((x - x0) / t) : (x < x0 ? s.left : s.right);
        const auto U = to_conservative<3>(w, s.gamma);
        for (int m = 0; m < 3; ++m) acc[m] += Rule::weights()[q] * half * U[m];
      }
    }
  }
  for (auto& v : acc) v /= (b - a);
  return to_primitive(acc, s.gamma);
}

}  // namespace cfweno
