#include "cfweno/reconstruction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfweno {

namespace {

void check_window(int r, std::span<const double> window) {
  if (static_cast<int>(window.size()) != 2 * r - 1)
    throw std::invalid_argument("window length must be 2r - 1");
}

}  // namespace

std::vector<double> linear_weights_interval_average(int r, double nu, Layout layout) {
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    std::vector<double> g(R);
    Reconstructor<L, R>::average_weights(std::abs(nu), g.data());
    return g;
  });
}

std::vector<double> linear_weights_foot_value(int r, double nu, Layout layout) {
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    std::vector<double> g(R);
    Reconstructor<L, R>::foot_weights(std::abs(nu), g.data());
    return g;
  });
}

std::vector<double> foot_value_poles(int r, Layout layout) {
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    using T = frozen::Table<L, R>;
    return std::vector<double>(T::poles, T::poles + T::pole_count);
  });
}

std::vector<double> smoothness_indicators(int r, std::span<const double> window, Layout layout) {
  check_window(r, window);
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    auto ind = Reconstructor<L, R>::indicators(window.data());
    return std::vector<double>(ind.beta, ind.beta + R);
  });
}

std::vector<double> NonlinearWeights::effective() const {
  if (!split) return omegas;
  std::vector<double> out(plus.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = sigma_plus * plus[k] - sigma_minus * minus[k];
  return out;
}

NonlinearWeights nonlinear_weights(std::span<const double> gammas, std::span<const double> betas,
                                   double epsilon) {
  if (gammas.size() != betas.size() || gammas.empty())
    throw std::invalid_argument("weights and indicators must have equal nonzero length");
  const std::size_t n = gammas.size();
  auto normalize = [&](const std::vector<double>& g) {
    std::vector<double> a(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = betas[k] + epsilon;
      a[k] = g[k] / (t * t);
      sum += a[k];
    }
    for (auto& v : a) v /= sum;
    return a;
  };
  NonlinearWeights out;
  out.split = std::any_of(gammas.begin(), gammas.end(), [](double g) { return g < 0.0; });
  if (!out.split) {
    out.omegas = normalize(std::vector<double>(gammas.begin(), gammas.end()));
    return out;
  }
  std::vector<double> gp(n), gm(n);
  for (std::size_t k = 0; k < n; ++k) {
    gp[k] = 0.5 * (gammas[k] + kSplitTheta * std::abs(gammas[k]));
    gm[k] = gp[k] - gammas[k];
    out.sigma_plus += gp[k];
    out.sigma_minus += gm[k];
  }
  out.plus = normalize(gp);
  out.minus = normalize(gm);
  return out;
}

double reconstruct_interval_average(int r, double nu, std::span<const double> window, Layout layout,
                                    Weighting mode) {
  check_window(r, window);
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    using K = Reconstructor<L, R>;
    return K::average(window.data(), std::abs(nu), K::indicators(window.data()), mode);
  });
}

double reconstruct_foot_value(int r, double nu, std::span<const double> window, Layout layout,
                              Weighting mode) {
  check_window(r, window);
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    using K = Reconstructor<L, R>;
    return K::foot(window.data(), std::abs(nu), K::indicators(window.data()), mode);
  });
}

double reconstruct_big_stencil(int r, Family family, double nu, std::span<const double> window,
                               Layout layout) {
  check_window(r, window);
  return dispatch_layout_r(r, layout, [&]<Layout L, int R>() {
    using K = Reconstructor<L, R>;
    return family == Family::interval_average ? K::big_average(window.data(), std::abs(nu))
                                              : K::big_foot(window.data(), std::abs(nu));
  });
}

std::vector<double> mirror_window(std::span<const double> window) {
  return std::vector<double>(window.rbegin(), window.rend());
}

}  // namespace cfweno
