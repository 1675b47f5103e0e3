#include "cfweno/cases.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cfweno {

namespace {

using boost::math::quadrature::gauss;

constexpr double kPi = std::numbers::pi;

void accumulate(double& acc, double v, double w) { acc += w * v; }
void scale(double& acc, double s) { acc *= s; }

template <std::size_t NC>
void accumulate(Cons<NC>& acc, const Cons<NC>& v, double w) {
  for (std::size_t k = 0; k < NC; ++k) acc[k] += w * v[k];
}
template <std::size_t NC>
void scale(Cons<NC>& acc, double s) {
  for (auto& x : acc) x *= s;
}

// Mean of f over [a, b], with the interval split at every break inside it.
template <class F>
auto piecewise_mean(const F& f, double a, double b, const std::vector<double>& breaks) {
  std::vector<double> cuts{a};
  for (double x : breaks)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  decltype(f(a)) acc{};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < gauss<double, 10>::abscissa().size(); ++q) {
      const double xq = gauss<double, 10>::abscissa()[q];
      const double wq = gauss<double, 10>::weights()[q];
      if (xq == 0.0) {
        accumulate(acc, f(mid), wq * half);
      } else {
        accumulate(acc, f(mid - half * xq), wq * half);
        accumulate(acc, f(mid + half * xq), wq * half);
      }
    }
  }
  scale(acc, 1.0 / (b - a));
  return acc;
}

double gaussian(double x, double beta, double z) { return std::exp(-beta * (x - z) * (x - z)); }
double ellipse(double x, double alpha, double a) { return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0)); }

double multiple_extremes(double x) {
  constexpr double z = -0.7, delta = 0.005, a = 0.5, alpha = 10.0;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  if (x >= -0.8 && x <= -0.6)
    return (gaussian(x, beta, z - delta) + gaussian(x, beta, z + delta) + 4.0 * gaussian(x, beta, z)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6)
    return (ellipse(x, alpha, a - delta) + ellipse(x, alpha, a + delta) + 4.0 * ellipse(x, alpha, a)) / 6.0;
  return 0.0;
}

Primitive prim(double rho, double u, double p) { return {rho, u, 0.0, p}; }
Primitive prim(double rho, double u, double v, double p) { return {rho, u, v, p}; }

std::vector<CaseSpec> build_registry() {
  std::vector<CaseSpec> cs;

  {
    CaseSpec c;
    c.name = "linear-sine";
    c.title = "linear advection of sin(pi x)";
    c.x0 = -1.0, c.x1 = 1.0, c.t_end = 2.0, c.grid_x = 80;
    c.scalar_ic = [](double x) { return std::sin(kPi * x); };
    c.reference = ReferenceKind::exact_shift;
    cs.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "burgers-smooth";
    c.title = "Burgers, 0.5 + sin(pi x) before breaking";
    c.x0 = 0.0, c.x1 = 2.0, c.t_end = 0.15, c.grid_x = 80;
    c.flux = ScalarFlux::burgers();
    c.scalar_ic = [](double x) { return 0.5 + std::sin(kPi * x); };
    c.reference = ReferenceKind::characteristics;
    cs.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "square-wave";
    c.title = "linear advection of a square wave";
    c.x0 = -1.0, c.x1 = 1.0, c.t_end = 20.0, c.grid_x = 100;
    c.scalar_ic = [](double x) { return (x >= -1.0 / 3.0 && x <= 1.0 / 3.0) ? 1.0 : -1.0; };
    c.breakpoints = {-1.0 / 3.0, 1.0 / 3.0};
    c.reference = ReferenceKind::exact_shift;
    cs.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "multiple-extremes";
    c.title = "Gaussian, square, triangle and semi-ellipse";
    c.x0 = -1.0, c.x1 = 1.0, c.t_end = 8.0, c.grid_x = 200;
    c.scalar_ic = multiple_extremes;
    c.breakpoints = {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.6};
    c.reference = ReferenceKind::exact_shift;
    c.note = "G is the Gaussian exp(-beta (x - z)^2) and F the semi-ellipse sqrt(max(1 - alpha^2 (x - a)^2, 0)), "
             "as in Jiang and Shu; one printed form swaps G into the F slots.";
    cs.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "burgers-long";
    c.title = "Burgers, 0.5 + sin(pi x) after shock formation";
    c.x0 = 0.0, c.x1 = 2.0, c.t_end = 20.0, c.grid_x = 80, c.cfl = 1.0;
    c.flux = ScalarFlux::burgers();
    c.scalar_ic = [](double x) { return 0.5 + std::sin(kPi * x); };
    cs.push_back(c);
  }

  auto euler = [](std::string name, std::string title, double a, double b, double t, int n, Boundary bc) {
    CaseSpec c;
    c.name = std::move(name);
    c.title = std::move(title);
    c.kind = CaseKind::euler1d;
    c.x0 = a, c.x1 = b, c.t_end = t, c.grid_x = n;
    c.left = c.right = bc;
    return c;
  };
  {
    auto c = euler("sod", "Sod shock tube", 0.0, 1.0, 0.2, 200, Boundary::outflow);
    c.euler_ic = [](double x) { return x <= 0.5 ? prim(1.0, 0.0, 1.0) : prim(0.125, 0.0, 0.1); };
    c.breakpoints = {0.5};
    c.reference = ReferenceKind::exact_riemann;
    c.riemann_x0 = 0.5;
    cs.push_back(c);
  }
  {
    auto c = euler("shu-osher", "Mach 3 shock and entropy wave", -5.0, 5.0, 1.8, 200, Boundary::outflow);
    c.euler_ic = [](double x) {
      return x < -4.0 ? prim(3.857, 2.629, 10.333) : prim(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0);
    };
    c.breakpoints = {-4.0};
    c.reference = ReferenceKind::fine_grid;
    cs.push_back(c);
  }
  {
    auto c = euler("titarev-toro", "shock and high-frequency entropy wave", -5.0, 5.0, 5.0, 400, Boundary::outflow);
    c.euler_ic = [](double x) {
      return x <= -4.5 ? prim(1.515695, 0.523346, 1.80500) : prim(1.0 + 0.1 * std::sin(20.0 * kPi * x), 0.0, 1.0);
    };
    c.breakpoints = {-4.5};
    c.reference = ReferenceKind::fine_grid;
    cs.push_back(c);
  }
  {
    auto c = euler("blast-wave", "interacting blast waves", 0.0, 1.0, 0.038, 200, Boundary::reflective);
    c.euler_ic = [](double x) {
      if (x < 0.1) return prim(1.0, 0.0, 1e3);
      if (x < 0.9) return prim(1.0, 0.0, 1e-2);
      return prim(1.0, 0.0, 1e2);
    };
    c.breakpoints = {0.1, 0.9};
    c.reference = ReferenceKind::fine_grid;
    cs.push_back(c);
  }

  auto euler2 = [](std::string name, std::string title, double bx, double by, double t, int nx, int ny,
                   Boundary bc) {
    CaseSpec c;
    c.name = std::move(name);
    c.title = std::move(title);
    c.kind = CaseKind::euler2d;
    c.dimension = 2;
    c.x0 = 0.0, c.x1 = bx, c.y0 = 0.0, c.y1 = by;
    c.t_end = t, c.grid_x = nx, c.grid_y = ny;
    c.left = c.right = c.bottom = c.top = bc;
    return c;
  };
  {
    auto c = euler2("riemann-2d-config3", "four shocks", 1.0, 1.0, 0.8, 400, 400, Boundary::outflow);
    c.ic2d = [](double x, double y) {
      const bool right = x >= 0.8, upper = y >= 0.8;
      if (right && upper) return prim(1.5, 0.0, 0.0, 1.5);
      if (!right && upper) return prim(0.5323, 1.206, 0.0, 0.3);
      if (!right && !upper) return prim(0.138, 1.206, 1.206, 0.029);
      return prim(0.5323, 0.0, 1.206, 0.3);
    };
    cs.push_back(c);
  }
  {
    auto c = euler2("riemann-2d-config16", "contact, rarefaction and shock", 1.0, 1.0, 0.6, 800, 800,
                    Boundary::outflow);
    c.ic2d = [](double x, double y) {
      const bool right = x >= 0.5, upper = y >= 0.5;
      if (right && upper) return prim(0.5313, 0.1, 0.1, 0.4);
      if (!right && upper) return prim(1.0222, -0.6179, 0.1, 1.0);
      if (!right && !upper) return prim(0.8, 0.1, 0.1, 1.0);
      return prim(1.0, 0.1, 0.8276, 1.0);
    };
    cs.push_back(c);
  }
  {
    auto c = euler2("implosion", "implosion in a periodic box", 0.6, 0.6, 0.4, 600, 600, Boundary::periodic);
    c.ic2d = [](double x, double y) {
      if (std::abs(x - 0.3) < 0.15 && std::abs(y - 0.3) < 0.15) return prim(0.125, 0.0, 0.0, 0.14);
      return prim(1.0, 0.0, 0.0, 1.0);
    };
    cs.push_back(c);
  }
  {
    auto c = euler2("triple-point", "single-material triple point", 7.0, 3.0, 5.0, 560, 240, Boundary::outflow);
    c.ic2d = [](double x, double y) {
      if (x < 1.0) return prim(1.0, 0.0, 0.0, 1.0);
      if (y < 1.5) return prim(1.0, 0.0, 0.0, 0.1);
      return prim(0.125, 0.0, 0.0, 0.1);
    };
    cs.push_back(c);
  }
  return cs;
}

}  // namespace

const std::vector<CaseSpec>& case_registry() {
  static const std::vector<CaseSpec> registry = build_registry();
  return registry;
}

const CaseSpec& find_case(const std::string& name) {
  for (const auto& c : case_registry())
    if (c.name == name) return c;
  throw ConfigError("unknown case '" + name + "'");
}

std::vector<std::string> case_names() {
  std::vector<std::string> out;
  for (const auto& c : case_registry()) out.push_back(c.name);
  return out;
}

std::vector<double> cell_averages(const std::function<double(double)>& f, double x0, double x1, int n,
                                  const std::vector<double>& breaks) {
  std::vector<double> out(n);
  const double h = (x1 - x0) / n;
  for (int i = 0; i < n; ++i) out[i] = piecewise_mean(f, x0 + i * h, x0 + (i + 1) * h, breaks);
  return out;
}

std::vector<Cons<3>> cell_averages_euler(const std::function<Primitive(double)>& f, double x0, double x1, int n,
                                         const std::vector<double>& breaks, double gamma) {
  std::vector<Cons<3>> out(n);
  const double h = (x1 - x0) / n;
  auto cons = [&](double x) { return to_conservative<3>(f(x), gamma); };
  for (int i = 0; i < n; ++i) out[i] = piecewise_mean(cons, x0 + i * h, x0 + (i + 1) * h, breaks);
  return out;
}

void init_scalar_grid(ScalarGrid& g, const CaseSpec& c) {
  const auto avg = cell_averages(c.scalar_ic, g.x0, g.x1, g.n, c.breakpoints);
  for (int i = 0; i < g.n; ++i) g.node(i) = avg[i];
  if (g.layout == Layout::compact)
    for (int i = 0; i <= g.n; ++i) g.face(i) = c.scalar_ic(g.x_face(i));
  if (g.left == Boundary::periodic && g.layout == Layout::compact) g.face(g.n) = g.face(0);
  g.t = 0.0;
}

void init_euler_grid(EulerGrid<3>& g, const CaseSpec& c) {
  const auto avg = cell_averages_euler(c.euler_ic, g.x0, g.x1, g.n, c.breakpoints, c.gamma);
  for (int i = 0; i < g.n; ++i) g.node(i) = avg[i];
  if (g.layout == Layout::compact)
    for (int i = 0; i <= g.n; ++i) g.face(i) = to_conservative<3>(c.euler_ic(g.x_face(i)), c.gamma);
  if (g.left == Boundary::periodic && g.layout == Layout::compact) g.face(g.n) = g.face(0);
  g.t = 0.0;
}

double burgers_characteristic_value(const std::function<double(double)>& u0, double x, double t) {
  double u = u0(x);
  for (int it = 0; it < 100; ++it) {
    const double xi = x - u * t;
    const double d = 1e-6;
    const double slope = (u0(xi + d) - u0(xi - d)) / (2.0 * d);
    const double res = u - u0(xi);
    const double step = res / (1.0 + t * slope);
    u -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(u))) break;
  }
  return u;
}

}  // namespace cfweno
