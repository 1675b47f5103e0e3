#pragma once

// Ideal-gas Euler equations along one direction. NC = 3 is (rho, rho u, E);
// NC = 4 adds the tangential momentum (rho, rho u, rho v, E). Component 1 is
// always the momentum normal to the sweep.

#include <array>
#include <cstddef>
#include <cmath>
#include <functional>

#include "cfweno/grid.hpp"
#include "cfweno/reconstruction.hpp"
#include "cfweno/scalar.hpp"
#include "cfweno/types.hpp"

namespace cfweno {

inline constexpr double kGammaAir = 1.4;

template <std::size_t NC>
using Cons = std::array<double, NC>;

struct Primitive {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

template <std::size_t NC>
Cons<NC> to_conservative(const Primitive& w, double gamma = kGammaAir) {
  Cons<NC> U{};
  U[0] = w.rho;
  U[1] = w.rho * w.u;
  double ke = w.u * w.u;
  if constexpr (NC == 4) {
    U[2] = w.rho * w.v;
    ke += w.v * w.v;
  }
  U[NC - 1] = w.p / (gamma - 1.0) + 0.5 * w.rho * ke;
  return U;
}

template <std::size_t NC>
double kinetic_energy(const Cons<NC>& U) {
  double m2 = U[1] * U[1];
  if constexpr (NC == 4) m2 += U[2] * U[2];
  return 0.5 * m2 / U[0];
}

template <std::size_t NC>
double pressure(const Cons<NC>& U, double gamma = kGammaAir) {
  return (gamma - 1.0) * (U[NC - 1] - kinetic_energy(U));
}

template <std::size_t NC>
Primitive to_primitive(const Cons<NC>& U, double gamma = kGammaAir) {
  Primitive w;
  w.rho = U[0];
  w.u = U[1] / U[0];
  if constexpr (NC == 4) w.v = U[2] / U[0];
  w.p = pressure(U, gamma);
  return w;
}

inline double sound_speed(const Primitive& w, double gamma = kGammaAir) {
  return std::sqrt(gamma * w.p / w.rho);
}

template <std::size_t NC>
bool admissible(const Cons<NC>& U, double gamma = kGammaAir) {
  return U[0] > 0.0 && pressure(U, gamma) > 0.0 && std::isfinite(U[NC - 1]);
}

// Flux in the normal direction.
template <std::size_t NC>
Cons<NC> physical_flux(const Cons<NC>& U, double gamma = kGammaAir) {
  const double u = U[1] / U[0];
  const double p = pressure(U, gamma);
  Cons<NC> F{};
  F[0] = U[1];
  F[1] = U[1] * u + p;
  if constexpr (NC == 4) F[2] = U[2] * u;
  F[NC - 1] = (U[NC - 1] + p) * u;
  return F;
}

// |u| + c in the normal direction.
template <std::size_t NC>
double normal_speed(const Cons<NC>& U, double gamma = kGammaAir) {
  const Primitive w = to_primitive(U, gamma);
  return std::abs(w.u) + sound_speed(w, gamma);
}

// Eigen-decomposition of the flux Jacobian at (u, v, H). Field order is
// (u - c, u, [shear,] u + c).
template <std::size_t NC>
struct EigenSystem {
  double u = 0.0, v = 0.0, c = 1.0, H = 0.0;
  double lambda[NC]{};
  double L[NC][NC]{};
  double R[NC][NC]{};

  static EigenSystem at(double u, double v, double H, double gamma = kGammaAir);
};

// Index of the wave (1, 2 or 3) that field k belongs to.
template <std::size_t NC>
constexpr int wave_of_field(int k) {
  return k == 0 ? 1 : (k == NC - 1 ? 3 : 2);
}

// Eigenvalues of the state itself, in field order.
template <std::size_t NC>
void state_eigenvalues(const Cons<NC>& U, double gamma, double* lambda) {
  const Primitive w = to_primitive(U, gamma);
  const double c = sound_speed(w, gamma);
  lambda[0] = w.u - c;
  for (int k = 1; k < NC - 1; ++k) lambda[k] = w.u;
  lambda[NC - 1] = w.u + c;
}

// Eigensystem at the Roe average (sqrt(rho) weights) of two states.
template <std::size_t NC>
EigenSystem<NC> roe_eigensystem(const Cons<NC>& UL, const Cons<NC>& UR, double gamma = kGammaAir);

// Baseline linearization between two neighboring node states.
template <std::size_t NC>
struct BaselineAverage {
  EigenSystem<NC> eig;
  bool roe = false;  // true when u_L > u_R
  Cons<NC> u_b{};    // (U_L + U_R) / 2
  Cons<NC> f_b{};
};

// Roe averages when u_L > u_R, the state of (U_L + U_R)/2 otherwise. Throws
// std::domain_error when the averaged sound speed is not real.
template <std::size_t NC>
BaselineAverage<NC> average_state(const Cons<NC>& UL, const Cons<NC>& UR, double gamma = kGammaAir);

enum class MiddlePressureForm { printed, consistent };

// Estimate of the pressure between two states, used to guess whether each
// outgoing wave is a shock (p_m > p_side) or a rarefaction. `printed` follows
// the formula term by term; `consistent` uses the two-rarefaction pressure
// (exponent (gamma-1)/(2 gamma) on the sound speeds) and sqrt(rho (gamma+1)/2)
// in the collision term.
double guess_middle_pressure(const Primitive& left, const Primitive& right, double gamma = kGammaAir,
                             MiddlePressureForm form = MiddlePressureForm::printed);

struct EulerOptions {
  double gamma = kGammaAir;
  double s1 = 2.0;
  double s2 = 1.05;
  MiddlePressureForm middle_pressure = MiddlePressureForm::printed;
};

// Which waves use the high-order linearization.
struct FluxOption {
  int option = 1;  // 1 .. 6
  bool high[3] = {false, false, false};
};

// Options 1 and 2 depend only on the pressures; p_m is consulted for 3 .. 6.
FluxOption select_flux_option(double p_left, double p_right, double p_m, const EulerOptions& opt);

// True when option 1 or 2 applies, so p_m is not needed.
bool pressure_ratio_decides(double p_left, double p_right, const EulerOptions& opt);

template <std::size_t NC>
using EulerGrid = LineGrid<Cons<NC>>;

struct EulerStats {
  KernelStats kernel;
  long long options[7] = {0, 0, 0, 0, 0, 0, 0};
  long long fallbacks = 0;  // inadmissible foot state, baseline used
  long long faces = 0;

  EulerStats& operator+=(const EulerStats& o) {
    kernel += o.kernel;
    for (int i = 0; i < 7; ++i) options[i] += o.options[i];
    fallbacks += o.fallbacks;
    faces += o.faces;
    return *this;
  }
};

template <std::size_t NC>
struct EulerInterface {
  Cons<NC> flux{};
  Cons<NC> half{};
  double lambda[NC]{};
  double phi[NC]{};
  int option = 1;
  bool fallback = false;
};

template <std::size_t NC>
using EulerInflow = std::function<Cons<NC>(double, double, bool)>;

template <std::size_t NC>
EulerGrid<NC> make_euler_grid(const SchemeConfig& cfg, int n, double x0, double x1, Boundary left,
                              Boundary right);

template <std::size_t NC>
void fill_euler_ghosts(EulerGrid<NC>& g, const EulerInflow<NC>& inflow = {});

// cfl * h / max(|u| + c) over all stored points.
template <std::size_t NC>
double compute_dt_euler(const EulerGrid<NC>& g, double cfl, double gamma = kGammaAir);

// Interface between node face-1 and node face (face = 0 .. n). Ghosts must be filled.
template <std::size_t NC>
EulerInterface<NC> euler_interface(const EulerGrid<NC>& g, int face, double tau, const SchemeConfig& cfg,
                                   const EulerOptions& opt, EulerStats* stats = nullptr);

// Throws PositivityFailure naming the first point with rho <= 0 or p <= 0.
template <std::size_t NC>
void check_positivity(const EulerGrid<NC>& g, double gamma, const char* where = "");

// One CFWENO/FWENO step of a line whose ghosts are already filled. `parallel`
// splits the faces over OpenMP threads.
template <std::size_t NC>
void update_euler_line(EulerGrid<NC>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt,
                       EulerStats* stats, bool parallel);

void step_euler(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
                EulerStats* stats = nullptr, const EulerInflow<3>& inflow = {});

void step_euler_serial(EulerGrid<3>& g, double tau, const SchemeConfig& cfg, const EulerOptions& opt = {},
                       EulerStats* stats = nullptr, const EulerInflow<3>& inflow = {});

}  // namespace cfweno
