#pragma once

// Exact-rational construction of the reconstruction stencils.
//
// Local coordinate xi = (x - x_{j+1/2}) / h, so the upwind cell j is [-1, 0]
// and the interface sits at 0. Window entry e of a compact window has offset
// o = e - (r - 1) in half-cell units around node j: even o is the average over
// [o/2 - 1, o/2], odd o is the point value at (o - 1)/2. Node-only windows use
// o as a node offset with cell [o - 1, o]. Sub-stencil k covers entries
// k .. k + r - 1; the big stencil covers all 2r - 1 entries.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "cfweno/types.hpp"

namespace cfweno::exact {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial with rational coefficients, ascending powers.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& v);
  static Poly monomial(int power, const Rational& v = 1);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational coeff(int n) const;
  [[nodiscard]] Rational lead() const { return c_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] double eval(double x) const;

  [[nodiscard]] Poly derivative() const;
  // p(1 - s) expressed in powers of s.
  [[nodiscard]] Poly reflected() const;
  [[nodiscard]] Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws on a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem);
  static Poly gcd(Poly a, Poly b);

  [[nodiscard]] std::string str(const char* var = "v") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// num / den in lowest terms with a monic denominator.
struct RationalFunction {
  Poly num;
  Poly den = Poly::constant(1);

  static RationalFunction make(Poly n, Poly d);
  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] double eval(double x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Data-coefficient polynomials in nu for one (r, family, layout).
struct StencilCoefficients {
  int r = 0;
  Family family = Family::interval_average;
  Layout layout = Layout::compact;
  // sub[k][e]: coefficient of window entry e in sub-stencil k (zero outside it).
  std::vector<std::vector<Poly>> sub;
  // big[e]: coefficient of window entry e in the full-window reconstruction.
  std::vector<Poly> big;
};

// One squared linear form of a smoothness indicator, in difference variables
// d_e = u_e - u_center (the center coefficient is always zero).
struct SquaredForm {
  Rational scale;
  std::vector<Rational> coeffs;
};

struct ExactStencilSet {
  int r = 0;
  Layout layout = Layout::compact;
  StencilCoefficients average;
  StencilCoefficients foot;
  std::vector<RationalFunction> average_weights;
  std::vector<RationalFunction> foot_weights;
  // Poles of the foot-value weights inside (0, 1), ascending.
  std::vector<double> poles;
  // quadratic[k][e][f]: smoothness indicator of sub-stencil k over window entries.
  std::vector<std::vector<std::vector<Rational>>> quadratic;
  // squares[k]: the same indicator as a sum of r - 1 weighted squares.
  std::vector<std::vector<SquaredForm>> squares;
};

int window_size(int r);

// Sub-stencil reconstruction polynomial basis: basis[e][n] is the xi^n
// coefficient of the Lagrange-type function attached to entry e.
std::vector<std::vector<Rational>> sub_stencil_basis(int r, Layout layout, int k);
std::vector<std::vector<Rational>> big_stencil_basis(int r, Layout layout);

StencilCoefficients derive_stencil_coefficients(int r, Family family,
                                                Layout layout = Layout::compact);

// Solves sum_k w_k * sub_k = big as rational functions of nu and checks every
// window entry. Throws std::logic_error if the system is inconsistent.
std::vector<RationalFunction> derive_linear_weights(const StencilCoefficients& coeffs);

std::vector<double> real_roots_in_unit_interval(const Poly& p);

std::vector<std::vector<std::vector<Rational>>> derive_smoothness_quadratic(int r, Layout layout);
std::vector<SquaredForm> decompose_squares(const std::vector<std::vector<Rational>>& q, int center);

ExactStencilSet derive_stencil_set(int r, Layout layout);

// Human-readable dump of every table as exact rationals.
std::string format_tables_text(const std::vector<ExactStencilSet>& sets);

// C++ header holding the frozen double-precision tables.
std::string emit_frozen_header(const std::vector<ExactStencilSet>& sets);

std::vector<ExactStencilSet> derive_all();

}  // namespace cfweno::exact
