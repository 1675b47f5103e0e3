#include "cfweno/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cfweno::exact {

namespace {

Rational rpow(const Rational& x, int n) {
  Rational v = 1;
  for (int i = 0; i < n; ++i) v *= x;
  return v;
}

// Gauss-Jordan inverse over the rationals.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular interpolation system");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Interpolation condition of one window entry: a cell average over [lo, hi]
// or a point value at lo (hi == lo).
struct Condition {
  Rational lo;
  Rational hi;
};

Condition condition(int r, Layout layout, int e) {
  const int o = e - (r - 1);
  if (layout == Layout::nodes) return {Rational(o - 1), Rational(o)};
  if (o % 2 == 0) return {Rational(o / 2 - 1), Rational(o / 2)};
  const Rational x((o - 1) / 2);
  return {x, x};
}

std::vector<Rational> condition_row(const Condition& c, int m) {
  std::vector<Rational> row(m);
  for (int n = 0; n < m; ++n) {
    if (c.lo == c.hi) {
      row[n] = rpow(c.lo, n);
    } else {
      row[n] = (rpow(c.hi, n + 1) - rpow(c.lo, n + 1)) / (Rational(n + 1) * (c.hi - c.lo));
    }
  }
  return row;
}

std::vector<std::vector<Rational>> basis_for(int r, Layout layout, int first, int count) {
  std::vector<std::vector<Rational>> a;
  for (int e = first; e < first + count; ++e) a.push_back(condition_row(condition(r, layout, e), count));
  auto inv = invert(a);
  // inv[n][e] is the xi^n coefficient attached to entry e.
  std::vector<std::vector<Rational>> basis(count, std::vector<Rational>(count));
  for (int e = 0; e < count; ++e)
    for (int n = 0; n < count; ++n) basis[e][n] = inv[n][e];
  return basis;
}

// Moving average (1/nu) int_{-nu}^0 or foot value at -nu of sum_n b_n xi^n.
Poly apply_family(const std::vector<Rational>& b, Family family) {
  std::vector<Rational> out(b.size());
  for (std::size_t n = 0; n < b.size(); ++n) {
    Rational sign = (n % 2 == 0) ? 1 : -1;
    out[n] = family == Family::interval_average ? sign * b[n] / Rational(n + 1) : sign * b[n];
  }
  return Poly(out);
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }

Poly Poly::monomial(int power, const Rational& v) {
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = v;
  return Poly(c);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int n) const {
  return n >= 0 && n < static_cast<int>(c_.size()) ? c_[n] : Rational(0);
}

Rational Poly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

double Poly::eval(double x) const {
  double v = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
  return v;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t n = 1; n < c_.size(); ++n) d[n - 1] = Rational(static_cast<int>(n)) * c_[n];
  return Poly(d);
}

Poly Poly::reflected() const {
  // p(1 - s) = sum_n c_n (1 - s)^n
  Poly out;
  Poly one_minus_s(std::vector<Rational>{1, -1});
  Poly power = constant(1);
  for (const auto& cn : c_) {
    out = out + cn * power;
    power = power * one_minus_s;
  }
  return out;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return (Rational(1) / c_.back()) * (*this);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(c);
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(c);
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> c = p.c_;
  for (auto& v : c) v *= s;
  return Poly(c);
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = Poly();
  rem = a;
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    Poly t = monomial(shift, rem.lead() / b.lead());
    q = q + t;
    rem = rem - t * b;
  }
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, rem;
    divmod(a, b, q, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

std::string Poly::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n] == 0) continue;
    Rational v = c_[n];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    if (n == 0 || v != 1) os << rational_str(v);
    if (n > 0) {
      if (v != 1) os << "*";
      os << var;
      if (n > 1) os << "^" << n;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction RationalFunction::make(Poly n, Poly d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  if (n.is_zero()) return {Poly(), Poly::constant(1)};
  Poly g = Poly::gcd(n, d);
  Poly qn, qd, rem;
  Poly::divmod(n, g, qn, rem);
  Poly::divmod(d, g, qd, rem);
  const Rational lead = qd.lead();
  return {(Rational(1) / lead) * qn, (Rational(1) / lead) * qd};
}

Rational RationalFunction::operator()(const Rational& x) const { return num(x) / den(x); }

double RationalFunction::eval(double x) const { return num.eval(x) / den.eval(x); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num * b.den + b.num * a.den, a.den * b.den);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num * b.den - b.num * a.den, a.den * b.den);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num * b.num, a.den * b.den);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::make(a.num * b.den, a.den * b.num);
}

// ---------------------------------------------------------------------------
// Stencils

int window_size(int r) { return 2 * r - 1; }

std::vector<std::vector<Rational>> sub_stencil_basis(int r, Layout layout, int k) {
  if (r < 2 || r > 4 || k < 0 || k >= r) throw std::invalid_argument("bad stencil index");
  return basis_for(r, layout, k, r);
}

std::vector<std::vector<Rational>> big_stencil_basis(int r, Layout layout) {
  if (r < 2 || r > 4) throw std::invalid_argument("r must be 2, 3 or 4");
  return basis_for(r, layout, 0, window_size(r));
}

StencilCoefficients derive_stencil_coefficients(int r, Family family, Layout layout) {
  if (r < 2 || r > 4) throw std::invalid_argument("r must be 2, 3 or 4");
  StencilCoefficients out;
  out.r = r;
  out.family = family;
  out.layout = layout;
  const int w = window_size(r);
  out.sub.assign(r, std::vector<Poly>(w));
  for (int k = 0; k < r; ++k) {
    auto basis = sub_stencil_basis(r, layout, k);
    for (int m = 0; m < r; ++m) out.sub[k][k + m] = apply_family(basis[m], family);
  }
  auto big = big_stencil_basis(r, layout);
  out.big.resize(w);
  for (int e = 0; e < w; ++e) out.big[e] = apply_family(big[e], family);
  return out;
}

std::vector<RationalFunction> derive_linear_weights(const StencilCoefficients& c) {
  const int r = c.r;
  const int w = window_size(r);
  std::vector<RationalFunction> gamma(r);
  // Entry e < r only appears in sub-stencils 0..e, which makes the system triangular.
  for (int k = 0; k < r; ++k) {
    RationalFunction rhs{c.big[k], Poly::constant(1)};
    for (int j = 0; j < k; ++j) rhs = rhs - gamma[j] * RationalFunction{c.sub[j][k], Poly::constant(1)};
    if (c.sub[k][k].is_zero()) throw std::logic_error("degenerate linear weight system");
    gamma[k] = rhs / RationalFunction{c.sub[k][k], Poly::constant(1)};
  }
  for (int e = 0; e < w; ++e) {
    RationalFunction sum{Poly(), Poly::constant(1)};
    for (int k = 0; k < r; ++k) sum = sum + gamma[k] * RationalFunction{c.sub[k][e], Poly::constant(1)};
    if (!(sum == RationalFunction::make(c.big[e], Poly::constant(1))))
      throw std::logic_error("linear weights do not reproduce the big stencil");
  }
  return gamma;
}

std::vector<double> real_roots_in_unit_interval(const Poly& p) {
  std::vector<double> roots;
  if (p.degree() < 1) return roots;
  std::vector<double> c;
  for (const auto& q : p.coeffs()) c.push_back(to_double(q));
  auto f = [&c](double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };
  const int samples = 20000;
  double x0 = 0.0;
  double f0 = f(x0);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = static_cast<double>(i) / samples;
    const double f1 = f(x1);
    if (f1 == 0.0 && i < samples) {
      roots.push_back(x1);
    } else if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0)) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200 && b - a > 0.0; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      // Exact rational roots such as 1/2 are snapped when the bracket contains them.
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  for (auto& x : roots) {
    for (int d = 2; d <= 12; ++d) {
      for (int n = 1; n < d; ++n) {
        const Rational q(n, d);
        if (std::abs(to_double(q) - x) < 1e-12 && p(q) == 0) x = to_double(q);
      }
    }
  }
  return roots;
}

std::vector<std::vector<std::vector<Rational>>> derive_smoothness_quadratic(int r, Layout layout) {
  const int w = window_size(r);
  std::vector<std::vector<std::vector<Rational>>> out(
      r, std::vector<std::vector<Rational>>(w, std::vector<Rational>(w, Rational(0))));
  for (int k = 0; k < r; ++k) {
    auto basis = sub_stencil_basis(r, layout, k);
    std::vector<Poly> phi;
    for (auto& b : basis) phi.emplace_back(b);
    for (int l = 1; l <= r - 1; ++l) {
      for (auto& f : phi) f = f.derivative();
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
          // integral over [-1, 0] of phi_a^(l) phi_b^(l)
          Poly prod = phi[a] * phi[b];
          Rational integral = 0;
          for (int n = 0; n <= prod.degree(); ++n) {
            Rational sign = (n % 2 == 0) ? 1 : -1;
            integral += sign * prod.coeff(n) / Rational(n + 1);
          }
          out[k][k + a][k + b] += integral;
        }
      }
    }
  }
  return out;
}

std::vector<SquaredForm> decompose_squares(const std::vector<std::vector<Rational>>& q, int center) {
  const int w = static_cast<int>(q.size());
  std::vector<int> idx;
  for (int e = 0; e < w; ++e) {
    if (e == center) continue;
    bool used = false;
    for (int f = 0; f < w; ++f) used = used || q[e][f] != 0;
    if (used) idx.push_back(e);
  }
  const int n = static_cast<int>(idx.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = q[idx[i]][idx[j]];
  // LDL^T: a = L D L^T with unit lower-triangular L.
  std::vector<std::vector<Rational>> lower(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> d(n);
  for (int j = 0; j < n; ++j) {
    Rational s = a[j][j];
    for (int k = 0; k < j; ++k) s -= lower[j][k] * lower[j][k] * d[k];
    d[j] = s;
    lower[j][j] = 1;
    for (int i = j + 1; i < n; ++i) {
      Rational t = a[i][j];
      for (int k = 0; k < j; ++k) t -= lower[i][k] * lower[j][k] * d[k];
      if (d[j] == 0) throw std::logic_error("smoothness form is not positive definite");
      lower[i][j] = t / d[j];
    }
  }
  std::vector<SquaredForm> out;
  for (int j = 0; j < n; ++j) {
    if (d[j] == 0) continue;
    SquaredForm sq{d[j], std::vector<Rational>(w, Rational(0))};
    for (int i = j; i < n; ++i) sq.coeffs[idx[i]] = lower[i][j];
    out.push_back(std::move(sq));
  }
  return out;
}

ExactStencilSet derive_stencil_set(int r, Layout layout) {
  ExactStencilSet s;
  s.r = r;
  s.layout = layout;
  s.average = derive_stencil_coefficients(r, Family::interval_average, layout);
  s.foot = derive_stencil_coefficients(r, Family::foot_value, layout);
  s.average_weights = derive_linear_weights(s.average);
  s.foot_weights = derive_linear_weights(s.foot);
  for (const auto& g : s.foot_weights)
    for (double x : real_roots_in_unit_interval(g.den)) s.poles.push_back(x);
  std::sort(s.poles.begin(), s.poles.end());
  s.poles.erase(std::unique(s.poles.begin(), s.poles.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                s.poles.end());
  s.quadratic = derive_smoothness_quadratic(r, layout);
  for (int k = 0; k < r; ++k) s.squares.push_back(decompose_squares(s.quadratic[k], r - 1));
  return s;
}

std::vector<ExactStencilSet> derive_all() {
  std::vector<ExactStencilSet> out;
  for (Layout l : {Layout::compact, Layout::nodes})
    for (int r = 2; r <= 4; ++r) out.push_back(derive_stencil_set(r, l));
  return out;
}

// ---------------------------------------------------------------------------
// Output

std::string format_tables_text(const std::vector<ExactStencilSet>& sets) {
  std::ostringstream os;
  for (const auto& s : sets) {
    const int w = window_size(s.r);
    os << "# layout=" << to_string(s.layout) << " r=" << s.r << "\n";
    for (const auto* c : {&s.average, &s.foot}) {
      os << "## " << to_string(c->family) << "\n";
      for (int k = 0; k < s.r; ++k) {
        os << "sub " << k << ":";
        for (int e = k; e < k + s.r; ++e) os << "  [" << e << "] " << c->sub[k][e].str();
        os << "\n";
      }
      os << "big:";
      for (int e = 0; e < w; ++e) os << "  [" << e << "] " << c->big[e].str();
      os << "\n";
      const auto& g = c->family == Family::interval_average ? s.average_weights : s.foot_weights;
      for (int k = 0; k < s.r; ++k)
        os << "weight " << k << ": (" << g[k].num.str() << ") / (" << g[k].den.str() << ")\n";
    }
    os << "poles:";
    for (double p : s.poles) os << " " << std::setprecision(17) << p;
    os << "\n## smoothness (sum of scale * (sum_e c_e (u_e - u_center))^2)\n";
    for (int k = 0; k < s.r; ++k) {
      os << "beta " << k << ":";
      for (const auto& sq : s.squares[k]) {
        os << "  " << rational_str(sq.scale) << " * (";
        for (int e = 0; e < w; ++e) os << (e ? ", " : "") << rational_str(sq.coeffs[e]);
        os << ")^2";
      }
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string dbl(const Rational& q) {
  std::ostringstream os;
  os << std::setprecision(17) << to_double(q);
  std::string s = os.str();
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string dbl(double x) { return dbl(Rational(x)); }

void emit_poly(std::ostream& os, const Poly& p, int degree) {
  os << "{";
  for (int n = 0; n <= degree; ++n) os << (n ? ", " : "") << dbl(p.coeff(n));
  os << "}";
}

int max_degree(const std::vector<Poly>& ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return d;
}

}  // namespace

std::string emit_frozen_header(const std::vector<ExactStencilSet>& sets) {
  std::ostringstream os;
  os << "#pragma once\n\n"
        "// Generated by `cfweno derive-coefficients --format header`. Do not edit.\n"
        "// Polynomials are in s = 1 - |nu|, ascending powers. Stencil coefficients\n"
        "// act on differences u_e - u_center.\n\n"
        "#include \"cfweno/types.hpp\"\n\n"
        "namespace cfweno::frozen {\n\n"
        "template <Layout L, int R>\nstruct Table;\n";
  for (const auto& s : sets) {
    const int r = s.r;
    const int w = window_size(r);
    const int center = r - 1;
    std::vector<Poly> sub_polys;
    std::vector<Poly> big_polys;
    for (const auto* c : {&s.average, &s.foot}) {
      for (int k = 0; k < r; ++k)
        for (int e = k; e < k + r; ++e) sub_polys.push_back(c->sub[k][e].reflected());
      for (int e = 0; e < w; ++e) big_polys.push_back(c->big[e].reflected());
    }
    std::vector<Poly> avg_num, avg_den, foot_num, foot_den;
    for (int k = 0; k < r; ++k) {
      avg_num.push_back(s.average_weights[k].num.reflected());
      avg_den.push_back(s.average_weights[k].den.reflected());
      foot_num.push_back(s.foot_weights[k].num.reflected());
      foot_den.push_back(s.foot_weights[k].den.reflected());
    }
    const int sd = max_degree(sub_polys);
    const int bd = max_degree(big_polys);
    os << "\ntemplate <>\nstruct Table<Layout::" << to_string(s.layout) << ", " << r << "> {\n";
    os << "  static constexpr int width = " << w << ";\n";
    os << "  static constexpr int center = " << center << ";\n";
    os << "  static constexpr int sub_degree = " << sd << ";\n";
    os << "  static constexpr int big_degree = " << bd << ";\n";
    for (const auto* c : {&s.average, &s.foot}) {
      const char* name = c->family == Family::interval_average ? "average" : "foot";
      os << "  static constexpr double " << name << "_sub[" << r << "][" << r << "][" << sd + 1 << "] = {\n";
      for (int k = 0; k < r; ++k) {
        os << "      {";
        for (int m = 0; m < r; ++m) {
          os << (m ? ",\n       " : "");
          Poly p = (k + m == center) ? Poly() : c->sub[k][k + m].reflected();
          emit_poly(os, p, sd);
        }
        os << "},\n";
      }
      os << "  };\n";
      os << "  static constexpr double " << name << "_big[" << w << "][" << bd + 1 << "] = {\n";
      for (int e = 0; e < w; ++e) {
        os << "      ";
        emit_poly(os, e == center ? Poly() : c->big[e].reflected(), bd);
        os << ",\n";
      }
      os << "  };\n";
    }
    auto emit_weights = [&](const char* name, const std::vector<Poly>& ps) {
      const int d = max_degree(ps);
      os << "  static constexpr int " << name << "_degree = " << d << ";\n";
      os << "  static constexpr double " << name << "[" << r << "][" << d + 1 << "] = {\n";
      for (const auto& p : ps) {
        os << "      ";
        emit_poly(os, p, d);
        os << ",\n";
      }
      os << "  };\n";
    };
    emit_weights("average_weight_num", avg_num);
    emit_weights("average_weight_den", avg_den);
    emit_weights("foot_weight_num", foot_num);
    emit_weights("foot_weight_den", foot_den);
    os << "  static constexpr int pole_count = " << s.poles.size() << ";\n";
    os << "  static constexpr double poles[" << std::max<std::size_t>(1, s.poles.size()) << "] = {";
    for (std::size_t i = 0; i < s.poles.size(); ++i) os << (i ? ", " : "") << dbl(s.poles[i]);
    if (s.poles.empty()) os << "0.0";
    os << "};\n";
    const int nsq = r - 1;
    os << "  static constexpr int square_count = " << nsq << ";\n";
    os << "  static constexpr double square_scale[" << r << "][" << nsq << "] = {\n";
    for (int k = 0; k < r; ++k) {
      if (static_cast<int>(s.squares[k].size()) != nsq)
        throw std::logic_error("unexpected smoothness rank");
      os << "      {";
      for (int l = 0; l < nsq; ++l) os << (l ? ", " : "") << dbl(s.squares[k][l].scale);
      os << "},\n";
    }
    os << "  };\n";
    os << "  static constexpr double square_coeff[" << r << "][" << nsq << "][" << w << "] = {\n";
    for (int k = 0; k < r; ++k) {
      os << "      {";
      for (int l = 0; l < nsq; ++l) {
        os << (l ? ",\n       " : "") << "{";
        for (int e = 0; e < w; ++e) os << (e ? ", " : "") << dbl(s.squares[k][l].coeffs[e]);
        os << "}";
      }
      os << "},\n";
    }
    os << "  };\n";
    os << "};\n";
  }
  os << "\n}  // namespace cfweno::frozen\n";
  return os.str();
}

}  // namespace cfweno::exact
