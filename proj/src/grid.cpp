#include "cfweno/grid.hpp"

namespace cfweno {

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::periodic;
  if (s == "dirichlet" || s == "inflow") return Boundary::dirichlet;
  if (s == "reflective" || s == "wall") return Boundary::reflective;
  if (s == "outflow") return Boundary::outflow;
  throw ConfigError("unknown boundary '" + s + "'");
}

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::periodic: return "periodic";
    case Boundary::dirichlet: return "dirichlet";
    case Boundary::reflective: return "reflective";
    case Boundary::outflow: return "outflow";
  }
  return "?";
}

}  // namespace cfweno
