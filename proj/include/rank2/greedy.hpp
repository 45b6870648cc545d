#pragma once

// Greedy elements x[a1,a2] as sums over compatible pairs, their pointed
// supports, and the lattice region that describes those supports.

#include <set>
#include <utility>

#include <boost/rational.hpp>

#include "rank2/dyck.hpp"
#include "rank2/laurent.hpp"
#include "rank2/roots.hpp"

namespace rank2 {

struct EnumerationOptions {
  int cap = default_enumeration_cap;
  unsigned threads = default_thread_count();
};

struct GreedyElement {
  int b = 1, c = 1;
  int a1 = 0, a2 = 0;
  CoeffGrid grid;
  LaurentPoly2 laurent;
};

// x1^-a1 x2^-a2 * sum_{p,q} grid(p,q) x1^{bp} x2^{cq}
inline LaurentPoly2 grid_to_laurent(const CoeffGrid& grid, int b, int c) {
  LaurentPoly2 f;
  for (int p = 0; p <= grid.a2(); ++p)
    for (int q = 0; q <= grid.a1(); ++q)
      f.add_term({-grid.a1() + std::int64_t{b} * p, -grid.a2() + std::int64_t{c} * q}, grid.at(p, q));
  return f;
}

inline GreedyElement greedy_element(int b, int c, int a1, int a2, const EnumerationOptions& opt = {}) {
  if (a1 < 0 || a2 < 0) throw negative_index(a1, a2);
  if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
  GreedyElement g;
  g.b = b;
  g.c = c;
  g.a1 = a1;
  g.a2 = a2;
  g.grid = enumerate_compatible_pairs(max_dyck_path(a1, a2), b, c, opt.cap, opt.threads);
  g.laurent = grid_to_laurent(g.grid, b, c);
  return g;
}

using LatticeSet = std::set<std::pair<int, int>>;  // (p, q)

inline LatticeSet pointed_support(const GreedyElement& g) {
  LatticeSet s;
  for (int p = 0; p <= g.a2; ++p)
    for (int q = 0; q <= g.a1; ++q)
      if (g.grid.at(p, q) != 0) s.emplace(p, q);
  return s;
}

using Rational = boost::rational<BigInt>;

// The region bounded by (0,0), (a2,0), (a1/b, a2/c), (0,a1) in the (p,q)
// plane. The sides on the two axes belong to it; the two sides through the
// vertex (a1/b, a2/c) do not.
class RegionP {
 public:
  struct Point {
    Rational p, q;
  };

  RegionP(int b, int c, int a1, int a2) : b_(b), c_(c), a1_(a1), a2_(a2) {
    if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
    if (a1 < 0 || a2 < 0) throw negative_index(a1, a2);
    origin_ = {Rational(0), Rational(0)};
    k_ = {Rational(a2), Rational(0)};
    l_ = {Rational(a1, b), Rational(a2, c)};
    m_ = {Rational(0), Rational(a1)};
  }

  int b() const { return b_; }
  int c() const { return c_; }
  int a1() const { return a1_; }
  int a2() const { return a2_; }
  const Point& vertex_k() const { return k_; }
  const Point& vertex_l() const { return l_; }
  const Point& vertex_m() const { return m_; }

  bool contains(const Rational& p, const Rational& q) const {
    const Point x{p, q};
    if (on_segment(origin_, k_, x) || on_segment(m_, origin_, x)) return true;
    if (on_segment(k_, l_, x) || on_segment(l_, m_, x)) return false;
    return strictly_inside(x);
  }

  bool contains(int p, int q) const { return contains(Rational(p), Rational(q)); }

 private:
  static Rational cross(const Point& o, const Point& a, const Point& x) {
    return (a.p - o.p) * (x.q - o.q) - (a.q - o.q) * (x.p - o.p);
  }

  static bool on_segment(const Point& a, const Point& b, const Point& x) {
    if (cross(a, b, x) != Rational(0)) return false;
    return std::min(a.p, b.p) <= x.p && x.p <= std::max(a.p, b.p) && std::min(a.q, b.q) <= x.q &&
           x.q <= std::max(a.q, b.q);
  }

  // Crossing-number test; only called for points off the boundary.
  bool strictly_inside(const Point& x) const {
    const Point poly[4] = {origin_, k_, l_, m_};
    bool inside = false;
    for (int i = 0, j = 3; i < 4; j = i++) {
      const Point& pi = poly[i];
      const Point& pj = poly[j];
      if ((pi.q > x.q) != (pj.q > x.q)) {
        // p-coordinate of the edge at height x.q
        const Rational at = pi.p + (x.q - pi.q) * (pj.p - pi.p) / (pj.q - pi.q);
        if (x.p < at) inside = !inside;
      }
    }
    return inside;
  }

  int b_, c_, a1_, a2_;
  Point origin_, k_, l_, m_;
};

inline LatticeSet region_lattice_points(const RegionP& r) {
  LatticeSet s;
  // the region sits inside [0, max(a2, a1/b)] x [0, max(a1, a2/c)]
  const int p_hi = std::max(r.a2(), r.a1() / r.b() + 1);
  const int q_hi = std::max(r.a1(), r.a2() / r.c() + 1);
  for (int p = 0; p <= p_hi; ++p)
    for (int q = 0; q <= q_hi; ++q)
      if (r.contains(p, q)) s.emplace(p, q);
  return s;
}

// Vertex (a1/b, a2/c) lies in the closed triangle (0,0), (a2,0), (0,a1):
// a1 * (a1/b) + a2 * (a2/c) <= a1 a2.
inline bool imaginary_triangle_check(int b, int c, int a1, int a2) {
  if (a1 <= 0 || a2 <= 0) throw out_of_range("imaginary_triangle_check needs a1, a2 > 0");
  const Rational lhs = Rational(a1) * Rational(a1, b) + Rational(a2) * Rational(a2, c);
  return lhs <= Rational(BigInt(a1) * a2);
}

inline bool support_equals_region(int b, int c, int a1, int a2, const EnumerationOptions& opt = {}) {
  if (!is_imaginary(b, c, {a1, a2}))
    throw not_imaginary_root("(" + std::to_string(a1) + "," + std::to_string(a2) +
                             ") is not a positive imaginary root");
  return pointed_support(greedy_element(b, c, a1, a2, opt)) == region_lattice_points(RegionP(b, c, a1, a2));
}

}  // namespace rank2
