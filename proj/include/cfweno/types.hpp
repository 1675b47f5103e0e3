#pragma once

#include <stdexcept>
#include <string>

namespace cfweno {

// Mixed node/half-point windows (compact) or node-only windows.
enum class Layout { compact, nodes };

enum class Family { interval_average, foot_value };

enum class Scheme { cfweno, fweno, weno_rk3 };

inline int order_to_r(int order) {
  if (order != 3 && order != 5 && order != 7)
    throw std::invalid_argument("order must be 3, 5 or 7");
  return (order + 1) / 2;
}

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::cfweno: return "cfweno";
    case Scheme::fweno: return "fweno";
    case Scheme::weno_rk3: return "weno-rk3";
  }
  return "?";
}

inline const char* to_string(Layout l) { return l == Layout::compact ? "compact" : "nodes"; }

inline const char* to_string(Family f) {
  return f == Family::interval_average ? "interval-average" : "foot-value";
}

struct CflViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositivityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cfweno
