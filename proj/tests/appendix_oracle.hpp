#pragma once

// Hand transcription of the printed basic stencils, kept independent of the
// derivation code. Offsets are in half cells around node j: 0 is u_j, +-1 the
// neighboring half points u_{j+-1/2}, +-2 the averages u_{j+-1}, +-3 the
// half points u_{j+-3/2}.

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace appendix {

// Small dense polynomial in v, ascending powers.
struct P {
  std::vector<double> c;

  P() : c{0.0} {}
  P(std::initializer_list<double> l) : c(l) {}
  static P from(std::vector<double> v) {
    P p;
    p.c = std::move(v);
    return p;
  }
  double operator()(double v) const {
    double s = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) s = s * v + c[n];
    return s;
  }
  P derivative() const {
    if (c.size() < 2) return P{0.0};
    std::vector<double> d(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n) d[n - 1] = n * c[n];
    return from(d);
  }
  friend P operator*(const P& a, const P& b) {
    std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return from(r);
  }
  friend P operator*(double s, const P& a) {
    P r = a;
    for (auto& x : r.c) x *= s;
    return r;
  }
};

inline const P V{0.0, 1.0};
inline const P one_minus_v{1.0, -1.0};
inline const P two_minus_v{2.0, -1.0};
inline const P one_plus_v{1.0, 1.0};
inline const P minus_v{0.0, -1.0};
inline const P minus_one_minus_v{-1.0, -1.0};

inline P pw(const P& p, int k) {
  P r{1.0};
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

// One printed term: polynomial factor times a combination of window values.
struct Term {
  P factor;
  std::map<int, double> diff;  // offset -> coefficient
};

// u_j + sum of terms.
struct Formula {
  std::string label;
  int r = 0;
  int k = 0;  // sub-stencil index, or r for the big stencil
  std::vector<Term> terms;
};

inline std::map<int, double> d1(int a, int b) { return {{a, 1.0}, {b, -1.0}}; }  // u_a - u_b

// Interval-average stencils, factor in v = |nu|. With `corrected`, the cubic
// term of A3 k=1 takes (1-v)^2 in place of the printed (1-v)(1+v).
inline std::vector<Formula> average_formulas(bool corrected = false) {
  const P q1 = one_minus_v;
  const P q2 = 0.5 * pw(one_minus_v, 2);
  const P q_m = one_minus_v * minus_v;
  const P q_m2 = 0.5 * one_minus_v * minus_v;
  const P q3 = 0.25 * one_minus_v * minus_v * one_plus_v;
  const P q4 = (1.0 / 12.0) * pw(one_minus_v, 2) * minus_v * one_plus_v;
  const P q0_3 = 0.25 * two_minus_v * pw(one_minus_v, 2);
  const P q5 = (1.0 / 36.0) * two_minus_v * pw(one_minus_v, 2) * minus_v * one_plus_v;
  const P q6 = (1.0 / 108.0) * pw(two_minus_v, 2) * pw(one_minus_v, 2) * minus_v * one_plus_v;

  const std::map<int, double> lap_m{{-1, 1}, {0, -2}, {1, 1}};      // u_{j-1/2} - 2u_j + u_{j+1/2}
  const std::map<int, double> lap_l{{-2, 1}, {-1, -2}, {0, 1}};     // u_{j-1} - 2u_{j-1/2} + u_j
  const std::map<int, double> lap_r{{0, 1}, {1, -2}, {2, 1}};       // u_j - 2u_{j+1/2} + u_{j+1}
  const std::map<int, double> t3_c{{-1, 2}, {0, -5}, {1, 4}, {2, -1}};
  const std::map<int, double> t3_l{{-3, -2}, {-2, 5}, {-1, -4}, {0, 1}};
  const std::map<int, double> t3_ml{{-2, -1}, {-1, 4}, {0, -5}, {1, 2}};
  const std::map<int, double> t3_r{{0, 1}, {1, -4}, {2, 5}, {3, -2}};
  const std::map<int, double> t4{{-2, -1}, {-1, 6}, {0, -10}, {1, 6}, {2, -1}};
  const std::map<int, double> t5{{-3, 3}, {-2, -10}, {-1, 18}, {0, -19}, {1, 9}, {2, -1}};
  const std::map<int, double> t6{{-3, -3}, {-2, 11}, {-1, -27}, {0, 38}, {1, -27}, {2, 11}, {3, -3}};

  std::vector<Formula> f;
  // A1
  f.push_back({"A1 k=0", 2, 0, {{q1, d1(0, -1)}}});
  f.push_back({"A1 k=1", 2, 1, {{q1, d1(1, 0)}}});
  f.push_back({"A1 big", 2, 2, {{q1, d1(1, 0)}, {q_m, lap_m}}});
  // A2
  f.push_back({"A2 k=0", 3, 0, {{q1, d1(0, -1)}, {q2, lap_l}}});
  f.push_back({"A2 k=1", 3, 1, {{q1, d1(1, 0)}, {q_m, lap_m}}});
  f.push_back({"A2 k=2", 3, 2, {{q1, d1(1, 0)}, {q_m2, lap_r}}});
  f.push_back({"A2 big", 3, 3, {{q1, d1(1, 0)}, {q_m2, lap_r}, {q3, t3_c}, {q4, t4}}});
  // A3
  f.push_back({"A3 k=0", 4, 0, {{q1, d1(0, -1)}, {q2, lap_l}, {q0_3, t3_l}}});
  const P q3_k1 = corrected ? 0.25 * pw(one_minus_v, 2) * minus_v : q3;
  f.push_back({"A3 k=1", 4, 1, {{q1, d1(1, 0)}, {q_m, lap_m}, {q3_k1, t3_ml}}});
  f.push_back({"A3 k=2", 4, 2, {{q1, d1(1, 0)}, {q_m2, lap_r}, {q3, t3_c}}});
  f.push_back({"A3 k=3", 4, 3, {{q1, d1(1, 0)}, {q_m2, lap_r}, {q3, t3_r}}});
  f.push_back({"A3 big", 4, 4, {{q1, d1(1, 0)}, {q_m2, lap_r}, {q3, t3_c}, {q4, t4}, {q5, t5}, {q6, t6}}});
  return f;
}

// Foot-value stencils as printed: each factor is differentiated in v.
inline std::vector<Formula> foot_formulas_printed() {
  const P f1 = minus_one_minus_v * minus_v;                                   // (-1-v)(-v)
  const P f2l = -0.5 * pw(one_minus_v, 2) * minus_v;                         // -1/2 (1-v)^2 (-v)
  const P f2m = minus_one_minus_v * pw(minus_v, 2);                          // (-1-v)(-v)^2
  const P f2r = -0.5 * one_minus_v * pw(minus_v, 2);                         // -1/2 (1-v)(-v)^2
  const P f3 = -0.25 * one_minus_v * pw(minus_v, 2) * one_plus_v;            // -1/4 (1-v)(-v)^2 (1+v)
  const P f3l = -0.25 * two_minus_v * pw(one_minus_v, 2) * minus_v;          // -1/4 (2-v)(1-v)^2 (-v)
  const P f4 = (-1.0 / 12.0) * pw(one_minus_v, 2) * pw(minus_v, 2) * one_plus_v;
  const P f5 = (-1.0 / 36.0) * two_minus_v * pw(one_minus_v, 2) * pw(minus_v, 2) * one_plus_v;
  const P f6 = (-1.0 / 108.0) * pw(two_minus_v, 2) * pw(one_minus_v, 2) * pw(minus_v, 2) * one_plus_v;

  const std::map<int, double> lap_m{{-1, 1}, {0, -2}, {1, 1}};
  const std::map<int, double> lap_l{{-2, 1}, {-1, -2}, {0, 1}};
  const std::map<int, double> lap_r{{0, 1}, {1, -2}, {2, 1}};
  const std::map<int, double> t3_c{{-1, 2}, {0, -5}, {1, 4}, {2, -1}};
  const std::map<int, double> t3_l{{-3, -2}, {-2, 5}, {-1, -4}, {0, 1}};
  const std::map<int, double> t3_ml{{-2, -1}, {-1, 4}, {0, -5}, {1, 2}};
  const std::map<int, double> t3_r{{0, 1}, {1, -4}, {2, 5}, {3, -2}};
  const std::map<int, double> t4{{-2, -1}, {-1, 6}, {0, -10}, {1, 6}, {2, -1}};
  const std::map<int, double> t5{{-3, 3}, {-2, -10}, {-1, 18}, {0, -19}, {1, 9}, {2, -1}};
  const std::map<int, double> t6{{-3, -3}, {-2, 11}, {-1, -27}, {0, 38}, {1, -27}, {2, 11}, {3, -3}};

  auto D = [](const P& p) { return p.derivative(); };
  std::vector<Formula> f;
  // A4
  f.push_back({"A4 k=0", 2, 0, {{D(f1), d1(0, -1)}}});
  f.push_back({"A4 k=1", 2, 1, {{D(f1), d1(1, 0)}}});
  f.push_back({"A4 big", 2, 2, {{D(f1), d1(1, 0)}, {D(f2r), lap_r}}});
  // A5
  f.push_back({"A5 k=0", 3, 0, {{D(f1), d1(0, -1)}, {D(f2l), lap_l}}});
  f.push_back({"A5 k=1", 3, 1, {{D(f1), d1(1, 0)}, {D(f2m), lap_m}}});
  f.push_back({"A5 k=2", 3, 2, {{D(f1), d1(1, 0)}, {D(f2r), lap_r}}});
  f.push_back({"A5 big", 3, 3, {{D(f1), d1(1, 0)}, {D(f2r), lap_r}, {D(f3), t3_c}, {D(f4), t4}}});
  // A6
  f.push_back({"A6 k=0", 4, 0, {{D(f1), d1(0, -1)}, {D(f2l), lap_l}, {D(f3l), t3_l}}});
  f.push_back({"A6 k=1", 4, 1, {{D(f1), d1(1, 0)}, {D(f2m), lap_m}, {D(f3), t3_ml}}});
  f.push_back({"A6 k=2", 4, 2, {{D(f1), d1(1, 0)}, {D(f2r), lap_r}, {D(f3), t3_c}}});
  f.push_back({"A6 k=3", 4, 3, {{D(f1), d1(1, 0)}, {D(f2r), lap_r}, {D(f3), t3_r}}});
  f.push_back({"A6 big", 4, 4,
               {{D(f1), d1(1, 0)}, {D(f2r), lap_r}, {D(f3), t3_c}, {D(f4), t4}, {D(f5), t5}, {D(f6), t6}}});
  return f;
}

// Foot values from the average stencils through u(-nu) = d/dnu [nu * ubar(nu)].
inline std::vector<Formula> foot_formulas_resolved() {
  std::vector<Formula> out;
  for (const auto& f : average_formulas(true)) {
    Formula g = f;
    g.label = "A" + std::to_string(f.label[1] - '0' + 3) + f.label.substr(2);
    for (auto& t : g.terms) t.factor = (V * t.factor).derivative();
    out.push_back(g);
  }
  return out;
}

// Coefficient of each compact window entry (size 2r - 1) at v.
inline std::vector<double> entry_coefficients(const Formula& f, double v) {
  const int w = 2 * f.r - 1, c = f.r - 1;
  std::vector<double> out(w + 6, 0.0);  // room for offsets outside the window
  out[c + 3] = 1.0;
  for (const auto& t : f.terms) {
    const double a = t.factor(v);
    for (const auto& [o, d] : t.diff) out[c + 3 + o] += a * d;
  }
  return out;
}

}  // namespace appendix
