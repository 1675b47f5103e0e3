#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfweno/types.hpp"

namespace cfweno {

enum class Boundary { periodic, dirichlet, reflective, outflow };

Boundary boundary_from_string(const std::string& s);
const char* to_string(Boundary b);

// One line of samples with ghost layers.
//
// Compact layout: interior points p = 0 .. 2n, faces x_{i-1/2} at p = 2i and
// nodes (cell averages) at p = 2i + 1, so both boundary faces are stored.
// Node layout: interior points p = 0 .. n - 1 are the nodes.
template <class V>
struct LineGrid {
  Layout layout = Layout::compact;
  int n = 0;
  double x0 = 0.0;
  double x1 = 1.0;
  int ghosts = 0;
  Boundary left = Boundary::periodic;
  Boundary right = Boundary::periodic;
  double t = 0.0;
  std::vector<V> points;

  LineGrid() = default;
  LineGrid(Layout l, int cells, double a, double b, int ghost_layers, Boundary bl, Boundary br)
      : layout(l), n(cells), x0(a), x1(b), ghosts(ghost_layers), left(bl), right(br) {
    if (cells < 1) throw std::invalid_argument("grid needs at least one cell");
    if (!(b > a)) throw std::invalid_argument("empty domain");
    if ((bl == Boundary::periodic) != (br == Boundary::periodic))
      throw std::invalid_argument("periodic boundaries must be paired");
    points.resize(interior_size() + 2 * ghosts);
  }

  [[nodiscard]] int interior_size() const { return layout == Layout::compact ? 2 * n + 1 : n; }
  [[nodiscard]] int node_stride() const { return layout == Layout::compact ? 2 : 1; }
  [[nodiscard]] double h() const { return (x1 - x0) / n; }

  // p is an interior index; ghosts are reachable with p < 0 or p >= interior_size().
  V& at(int p) { return points[ghosts + p]; }
  const V& at(int p) const { return points[ghosts + p]; }

  [[nodiscard]] int node_index(int i) const { return layout == Layout::compact ? 2 * i + 1 : i; }
  V& node(int i) { return at(node_index(i)); }
  const V& node(int i) const { return at(node_index(i)); }
  // Face x_{i - 1/2}, i = 0 .. n (compact only).
  V& face(int i) { return at(2 * i); }
  const V& face(int i) const { return at(2 * i); }

  [[nodiscard]] double x_node(int i) const { return x0 + (i + 0.5) * h(); }
  [[nodiscard]] double x_face(int i) const { return x0 + i * h(); }
  [[nodiscard]] double x_point(int p) const {
    return layout == Layout::compact ? x0 + 0.5 * p * h() : x_node(p);
  }
  [[nodiscard]] bool is_node(int p) const { return layout == Layout::nodes || (p % 2 + 2) % 2 == 1; }

  [[nodiscard]] std::vector<V> nodes() const {
    std::vector<V> out(n);
    for (int i = 0; i < n; ++i) out[i] = node(i);
    return out;
  }
};

// Fills ghost layers. `mirror` maps a state to its reflection across a wall
// (normal momentum negated); `inflow(x, t, is_node)` supplies Dirichlet data.
template <class V, class Mirror>
void fill_ghosts(LineGrid<V>& g, Mirror mirror,
                 const std::function<V(double, double, bool)>& inflow = {}) {
  const int m = g.interior_size();
  const int G = g.ghosts;
  const bool compact = g.layout == Layout::compact;
  // Period of the sample pattern: face 2n coincides with face 0.
  const int period = compact ? 2 * g.n : g.n;
  for (int side = 0; side < 2; ++side) {
    const Boundary b = side == 0 ? g.left : g.right;
    for (int k = 1; k <= G; ++k) {
      const int p = side == 0 ? -k : m - 1 + k;
      V& dst = g.at(p);
      switch (b) {
        case Boundary::periodic:
          dst = g.at(side == 0 ? p + period : p - period);
          break;
        case Boundary::outflow: {
          int src;
          if (compact) {
            const bool node = g.is_node(p);
            src = side == 0 ? (node ? 1 : 0) : (node ? m - 2 : m - 1);
          } else {
            src = side == 0 ? 0 : m - 1;
          }
          dst = g.at(src);
          break;
        }
        case Boundary::reflective: {
          // Compact: mirror about face p = 0 (or p = m - 1). Nodes: about the wall face.
          int src;
          if (compact) src = side == 0 ? -p : 2 * (m - 1) - p;
          else src = side == 0 ? -p - 1 : 2 * m - 1 - p;
          dst = mirror(g.at(src));
          break;
        }
        case Boundary::dirichlet:
          if (!inflow) throw std::logic_error("dirichlet boundary without boundary data");
          dst = inflow(g.x_point(p), g.t, g.is_node(p));
          break;
      }
    }
  }
}

}  // namespace cfweno
