#pragma once

// Runtime reconstruction kernels over the frozen stencil tables.
//
// A window holds 2r - 1 upwind-oriented samples centered on node j. The
// interval average is the mean of the reconstruction over [x_{j+1/2} - |nu| h,
// x_{j+1/2}]; the foot value is its point value at x_{j+1/2} - |nu| h.

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfweno/frozen_tables.hpp"
#include "cfweno/types.hpp"

namespace cfweno {

inline constexpr double kWenoEpsilon = 1e-6;
inline constexpr double kPoleHalfWidth = 0.05;
inline constexpr double kSplitTheta = 3.0;

enum class Weighting { nonlinear, linear };

struct KernelStats {
  long long clamps = 0;
  long long splits = 0;

  KernelStats& operator+=(const KernelStats& o) {
    clamps += o.clamps;
    splits += o.splits;
    return *this;
  }
};

// Moves |nu| out of (pole - half_width, pole + half_width) for every pole; a
// value exactly on a pole goes to the right side.
inline double clamp_weight_argument(double abs_nu, const double* poles, int count,
                                    double half_width = kPoleHalfWidth) {
  for (int i = 0; i < count; ++i) {
    const double p = poles[i];
    if (abs_nu > p - half_width && abs_nu < p + half_width)
      return abs_nu < p ? p - half_width : p + half_width;
  }
  return abs_nu;
}

namespace detail {

template <int D>
inline double horner(const double (&c)[D], double s) {
  double v = c[D - 1];
  for (int n = D - 2; n >= 0; --n) v = v * s + c[n];
  return v;
}

// Signed recombination of r candidate values with possibly negative linear
// weights: positive and negative parts are weighted separately.
template <int R>
inline double combine(const double* gamma, const double* inv_beta, const double* value,
                      Weighting mode, KernelStats* stats) {
  bool negative = false;
  for (int k = 0; k < R; ++k) negative = negative || gamma[k] < 0.0;
  if (mode == Weighting::linear) {
    double v = 0.0;
    for (int k = 0; k < R; ++k) v += gamma[k] * value[k];
    return v;
  }
  if (!negative) {
    double num = 0.0, den = 0.0;
    for (int k = 0; k < R; ++k) {
      const double a = gamma[k] * inv_beta[k];
      num += a * value[k];
      den += a;
    }
    return num / den;
  }
  if (stats) ++stats->splits;
  double sp = 0.0, sm = 0.0, np = 0.0, dp = 0.0, nm = 0.0, dm = 0.0;
  for (int k = 0; k < R; ++k) {
    const double gp = 0.5 * (gamma[k] + kSplitTheta * std::abs(gamma[k]));
    const double gm = gp - gamma[k];
    sp += gp;
    sm += gm;
    const double ap = gp * inv_beta[k];
    const double am = gm * inv_beta[k];
    np += ap * value[k];
    dp += ap;
    nm += am * value[k];
    dm += am;
  }
  return sp * (np / dp) - sm * (nm / dm);
}

}  // namespace detail

template <Layout L, int R>
struct Reconstructor {
  using Table = frozen::Table<L, R>;
  static constexpr int width = 2 * R - 1;
  static constexpr int center = R - 1;

  // 1 / (beta_k + eps)^2 for each sub-stencil.
  struct Indicators {
    double beta[R];
    double inv[R];
  };

  static Indicators indicators(const double* w) {
    Indicators ind{};
    const double uc = w[center];
    for (int k = 0; k < R; ++k) {
      double b = 0.0;
      for (int l = 0; l < R - 1; ++l) {
        double lin = 0.0;
        for (int e = k; e < k + R; ++e) lin += Table::square_coeff[k][l][e] * (w[e] - uc);
        b += Table::square_scale[k][l] * lin * lin;
      }
      ind.beta[k] = b;
      const double t = b + kWenoEpsilon;
      ind.inv[k] = 1.0 / (t * t);
    }
    return ind;
  }

  static void average_weights(double abs_nu, double* gamma) {
    const double s = 1.0 - abs_nu;
    for (int k = 0; k < R; ++k)
      gamma[k] = detail::horner(Table::average_weight_num[k], s) /
                 detail::horner(Table::average_weight_den[k], s);
  }

  static void foot_weights(double abs_nu, double* gamma, KernelStats* stats = nullptr) {
    const double arg = clamp_weight_argument(abs_nu, Table::poles, Table::pole_count);
    if (stats && arg != abs_nu) ++stats->clamps;
    const double s = 1.0 - arg;
    for (int k = 0; k < R; ++k)
      gamma[k] = detail::horner(Table::foot_weight_num[k], s) /
                 detail::horner(Table::foot_weight_den[k], s);
  }

  static void average_candidates(const double* w, double abs_nu, double* v) {
    candidates(Table::average_sub, w, 1.0 - abs_nu, v);
  }

  static void foot_candidates(const double* w, double abs_nu, double* v) {
    candidates(Table::foot_sub, w, 1.0 - abs_nu, v);
  }

  // At nu = 0 both values are the face sample itself (compact windows store
  // it at center + 1), whichever side is upwind.
  static double average(const double* w, double abs_nu, const Indicators& ind,
                        Weighting mode = Weighting::nonlinear, KernelStats* stats = nullptr) {
    if (L == Layout::compact && abs_nu == 0.0) return w[center + 1];
    double gamma[R], v[R];
    average_weights(abs_nu, gamma);
    average_candidates(w, abs_nu, v);
    return detail::combine<R>(gamma, ind.inv, v, mode, stats);
  }

  static double foot(const double* w, double abs_nu, const Indicators& ind,
                     Weighting mode = Weighting::nonlinear, KernelStats* stats = nullptr) {
    if (L == Layout::compact && abs_nu == 0.0) return w[center + 1];
    double gamma[R], v[R];
    foot_weights(abs_nu, gamma, stats);
    foot_candidates(w, abs_nu, v);
    return detail::combine<R>(gamma, ind.inv, v, mode, stats);
  }

  // Full-window (order 2r - 1) reconstructions, used as a reference.
  static double big_average(const double* w, double abs_nu) { return big(Table::average_big, w, 1.0 - abs_nu); }
  static double big_foot(const double* w, double abs_nu) { return big(Table::foot_big, w, 1.0 - abs_nu); }

 private:
  template <int D>
  static void candidates(const double (&table)[R][R][D], const double* w, double s, double* v) {
    const double uc = w[center];
    for (int k = 0; k < R; ++k) {
      double acc = 0.0;
      for (int m = 0; m < R; ++m) {
        if (k + m == center) continue;
        acc += detail::horner(table[k][m], s) * (w[k + m] - uc);
      }
      v[k] = uc + acc;
    }
  }

  template <int D>
  static double big(const double (&table)[width][D], const double* w, double s) {
    const double uc = w[center];
    double acc = 0.0;
    for (int e = 0; e < width; ++e) {
      if (e == center) continue;
      acc += detail::horner(table[e], s) * (w[e] - uc);
    }
    return uc + acc;
  }
};

// ---------------------------------------------------------------------------
// Runtime-dispatched entry points. `r` is 2, 3 or 4.

std::vector<double> linear_weights_interval_average(int r, double nu, Layout layout = Layout::compact);
std::vector<double> linear_weights_foot_value(int r, double nu, Layout layout = Layout::compact);
std::vector<double> foot_value_poles(int r, Layout layout = Layout::compact);
std::vector<double> smoothness_indicators(int r, std::span<const double> window,
                                          Layout layout = Layout::compact);

struct NonlinearWeights {
  bool split = false;
  // Unsplit: omegas. Split: the normalized positive and negative parts with
  // their sums; the effective weight of stencil k is sp*plus[k] - sm*minus[k].
  std::vector<double> omegas;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  std::vector<double> plus;
  std::vector<double> minus;

  [[nodiscard]] std::vector<double> effective() const;
};

NonlinearWeights nonlinear_weights(std::span<const double> gammas, std::span<const double> betas,
                                   double epsilon = kWenoEpsilon);

double reconstruct_interval_average(int r, double nu, std::span<const double> window,
                                    Layout layout = Layout::compact,
                                    Weighting mode = Weighting::nonlinear);
double reconstruct_foot_value(int r, double nu, std::span<const double> window,
                              Layout layout = Layout::compact,
                              Weighting mode = Weighting::nonlinear);

// Full-window reconstruction with linear weights folded in.
double reconstruct_big_stencil(int r, Family family, double nu, std::span<const double> window,
                               Layout layout = Layout::compact);

std::vector<double> mirror_window(std::span<const double> window);

// Calls f.template operator()<R>() for the runtime r.
template <class F>
decltype(auto) dispatch_r(int r, F&& f) {
  switch (r) {
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    case 4: return f.template operator()<4>();
    default: throw std::invalid_argument("r must be 2, 3 or 4");
  }
}

// Calls f.template operator()<L, R>() for the runtime layout and r.
template <class F>
decltype(auto) dispatch_layout_r(int r, Layout layout, F&& f) {
  if (layout == Layout::compact)
    return dispatch_r(r, [&]<int R>() -> decltype(auto) { return f.template operator()<Layout::compact, R>(); });
  return dispatch_r(r, [&]<int R>() -> decltype(auto) { return f.template operator()<Layout::nodes, R>(); });
}

}  // namespace cfweno
