#pragma once

// Checks built on top of the greedy/roots layers: the element p, its
// W-translates p_k, the two summands p_k splits into, the injection mu
// between compatible pairs, and geometric facts about the beta-path.
//
// The sequence machinery assumes b >= c. For b < c the work is done on the
// mirror (c, b) and every index and monomial is transposed back, so greedy
// elements are still enumerated in the requested algebra on the transposed
// Dyck paths; these runs cover the w(2;k) orbit of the requested algebra.

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "rank2/cluster.hpp"
#include "rank2/dyck.hpp"
#include "rank2/greedy.hpp"
#include "rank2/laurent.hpp"
#include "rank2/roots.hpp"

namespace rank2 {

struct SignedIndex {
  int sign = 1;
  RootVector index;
};

struct PSpec {
  int b = 0, c = 0;
  std::vector<SignedIndex> terms;  // two positive, one negative
};

inline PSpec build_p(int b, int c) {
  if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
  if (b * c <= 4) throw not_wild(b, c);
  PSpec p{b, c, {}};
  if (std::min(b, c) > 1) {
    p.terms = {{1, {b * c - b + 1, c + 1}}, {1, {b + 1, b * c - c + 1}}, {-1, {1, 1}}};
  } else if (c == 1) {
    p.terms = {{1, {b + 2, 3}}, {1, {b + 2, b - 1}}, {-1, {2, 1}}};
  } else {
    p.terms = {{1, {3, c + 2}}, {1, {c - 1, c + 2}}, {-1, {1, 2}}};
  }
  return p;
}

namespace detail {

inline int narrow(const BigInt& v) {
  if (v < 0 || v > 1'000'000) throw out_of_range("index " + v.str() + " out of supported range");
  return v.convert_to<int>();
}

inline std::int64_t narrow64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

// Canonical orientation (b >= c) plus the map back to the requested one.
struct Oriented {
  int b = 0, c = 0;        // requested
  bool mirrored = false;   // b < c
  int cb = 0, cc = 0;      // canonical, cb >= cc

  Oriented(int b_, int c_) : b(b_), c(c_), mirrored(b_ < c_) {
    if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
    if (b * c <= 4) throw not_wild(b, c);
    cb = std::max(b, c);
    cc = std::min(b, c);
  }

  RootVector orient(RootVector v) const { return mirrored ? v.swapped() : v; }
  ExponentPair orient(ExponentPair e) const { return mirrored ? ExponentPair{e.e2, e.e1} : e; }
  std::pair<int, int> algebra(int canonical_first, int canonical_second) const {
    return mirrored ? std::pair{canonical_second, canonical_first} : std::pair{canonical_first, canonical_second};
  }
};

}  // namespace detail

struct PkIndices {
  int b = 0, c = 0;            // requested algebra
  std::int64_t k = 0;
  int branch = 1;              // 1: w(1;k) orbit, 2: w(2;k) orbit (mirrored input)
  int alg_b = 0, alg_c = 0;    // algebra the three greedy elements live in
  RootVector beta, gamma, alpha;
  ExponentPair split_monomial;  // x1^{alpha(k-2)} x2^{-alpha(k-1)}, oriented
};

inline PkIndices pk_indices(int b, int c, std::int64_t k) {
  if (k < 0) throw out_of_range("k must be nonnegative");
  const detail::Oriented o(b, c);
  const SequenceContext s = sequences(o.cb, o.cc, k, k);
  PkIndices r;
  r.b = b;
  r.c = c;
  r.k = k;
  r.branch = o.mirrored ? 2 : 1;
  std::tie(r.alg_b, r.alg_c) = o.algebra(s.r(k - 1), s.r(k));
  auto pair_at = [&](const Sequence& seq) {
    return o.orient(RootVector{detail::narrow64(seq(k)), detail::narrow64(seq(k - 1))});
  };
  r.beta = pair_at(s.beta);
  r.gamma = pair_at(s.gamma);
  r.alpha = pair_at(s.alpha);
  r.split_monomial = o.orient(ExponentPair{detail::narrow64(s.alpha(k - 2)), -detail::narrow64(s.alpha(k - 1))});
  return r;
}

// The same three index pairs obtained by applying the Weyl word w(1;k) (or
// w(2;k) for mirrored input) of the requested algebra to the indices of p,
// transposed for odd k so that they live in A(r_{k-1}, r_k).
inline std::vector<RootVector> pk_indices_via_weyl(int b, int c, std::int64_t k) {
  const detail::Oriented o(b, c);
  const WeylWord w = weyl_word(b, c, o.mirrored ? 2 : 1, static_cast<int>(k));
  std::vector<RootVector> out;
  for (const auto& t : build_p(b, c).terms) {
    const RootVector image = w.apply(t.index);
    out.push_back(k % 2 ? image.swapped() : image);
  }
  return out;
}

struct PkReport {
  PkIndices indices;
  std::optional<BigInt> min_coeff;  // nullopt when p_k == 0
  std::size_t support_size = 0;
  bool any_negative = false;
  bool pass = false;
  LaurentPoly2 value;
  double millis = 0;
};

namespace detail {

inline LaurentPoly2 greedy_laurent(int b, int c, RootVector v, const EnumerationOptions& opt) {
  return greedy_element(b, c, narrow(BigInt(v.a1)), narrow(BigInt(v.a2)), opt).laurent;
}

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// p_k = x[beta] + x[gamma] - x[alpha] in A(r_{k-1}, r_k); passes when it is
// nonzero and has no negative coefficient.
inline PkReport check_pk_positive(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  PkReport rep;
  rep.millis = detail::time_ms([&] {
    rep.indices = pk_indices(b, c, k);
    const auto& ix = rep.indices;
    rep.value = detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.beta, opt) +
                detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.gamma, opt) -
                detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.alpha, opt);
    rep.support_size = rep.value.size();
    if (!rep.value.is_zero()) rep.min_coeff = lp_min_coefficient(rep.value);
    rep.any_negative = rep.min_coeff && *rep.min_coeff < 0;
    rep.pass = rep.min_coeff && !rep.any_negative;
  });
  return rep;
}

struct SplitReport {
  bool pass = false;
  std::optional<BigInt> min_coeff;
  BigInt monomial_coefficient;  // coefficient of the split monomial in x[gamma] (first summand only)
  LaurentPoly2 value;
};

inline bool nonnegative(const LaurentPoly2& f) { return f.is_zero() || lp_min_coefficient(f) >= 0; }

// x[gamma] - x1^{alpha(k-2)} x2^{-alpha(k-1)}
inline SplitReport split_first_summand(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  const PkIndices ix = pk_indices(b, c, k);
  const LaurentPoly2 g = detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.gamma, opt);
  SplitReport r;
  r.monomial_coefficient = g.coefficient(ix.split_monomial);
  r.value = g - LaurentPoly2::monomial(ix.split_monomial);
  if (!r.value.is_zero()) r.min_coeff = lp_min_coefficient(r.value);
  r.pass = r.monomial_coefficient >= 1 && nonnegative(r.value);
  return r;
}

// x[beta] + x1^{alpha(k-2)} x2^{-alpha(k-1)} - x[alpha]
inline SplitReport split_second_summand(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  const PkIndices ix = pk_indices(b, c, k);
  SplitReport r;
  r.value = detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.beta, opt) + LaurentPoly2::monomial(ix.split_monomial) -
            detail::greedy_laurent(ix.alg_b, ix.alg_c, ix.alpha, opt);
  if (!r.value.is_zero()) r.min_coeff = lp_min_coefficient(r.value);
  r.pass = nonnegative(r.value);
  return r;
}

inline bool check_eq2(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  return split_first_summand(b, c, k, opt).pass;
}

inline bool check_eq1(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  return split_second_summand(b, c, k, opt).pass;
}

struct MuReport {
  int b = 0, c = 0;     // canonical orientation
  std::int64_t k = 0;
  int alg_b = 0, alg_c = 0;
  int domain_a1 = 0, domain_a2 = 0;
  int image_a1 = 0, image_a2 = 0;
  std::size_t domain_size = 0;        // compatible pairs minus the excluded one
  bool excluded_found = false;        // (empty, all verticals) was among the compatible pairs
  bool excluded_image_compatible = false;
  std::size_t image_failures = 0;
  std::size_t collisions = 0;
  std::size_t size_violations = 0;

  bool pass() const { return excluded_found && image_failures == 0 && collisions == 0 && size_violations == 0; }
};

// mu(S1, S2) = ({u'_1..u'_{alpha(k)}} + shift(S1, alpha(k)),
//               shift(S2, alpha(k-1)) + {v'_{2 alpha(k-1)+1}..v'_{beta(k-1)}})
inline MuReport mu_map(int b, int c, std::int64_t k, const EnumerationOptions& opt = {}) {
  if (k < 0) throw out_of_range("k must be nonnegative");
  const detail::Oriented o(b, c);
  const SequenceContext s = sequences(o.cb, o.cc, k, k);
  MuReport rep;
  rep.b = o.cb;
  rep.c = o.cc;
  rep.k = k;
  rep.alg_b = s.r(k - 1);
  rep.alg_c = s.r(k);
  rep.domain_a1 = detail::narrow(s.alpha(k));
  rep.domain_a2 = detail::narrow(s.alpha(k - 1));
  rep.image_a1 = detail::narrow(s.beta(k));
  rep.image_a2 = detail::narrow(s.beta(k - 1));
  const int shift1 = rep.domain_a1;
  const int shift2 = rep.domain_a2;
  const int add1 = detail::narrow(s.alpha(k + 1));
  if (rep.image_a1 > 64 || rep.image_a2 > 64) throw too_large(rep.image_a1 + rep.image_a2, 128);

  const DyckPath domain = max_dyck_path(rep.domain_a1, rep.domain_a2);
  const DyckPath image = max_dyck_path(rep.image_a1, rep.image_a2);
  const SubsetPair excluded{0, low_bits(rep.domain_a2)};
  const EdgeMask tail2 = low_bits(rep.image_a2) & ~low_bits(2 * shift2);

  auto mu = [&](const SubsetPair& x) {
    return SubsetPair{low_bits(shift1) | (x.s1 << shift1), (x.s2 << shift2) | tail2};
  };

  std::set<SubsetPair> seen;
  for (const SubsetPair& x : list_compatible_pairs(domain, rep.alg_b, rep.alg_c, opt.cap)) {
    if (x == excluded) {
      rep.excluded_found = true;
      continue;
    }
    ++rep.domain_size;
    const SubsetPair y = mu(x);
    if (!is_compatible(image, y, rep.alg_b, rep.alg_c)) ++rep.image_failures;
    if (!seen.insert(y).second) ++rep.collisions;
    if (y.size1() != x.size1() + shift1 || y.size2() != x.size2() + add1) ++rep.size_violations;
  }
  rep.excluded_image_compatible = is_compatible(image, mu(excluded), rep.alg_b, rep.alg_c);
  return rep;
}

struct SupportComparison {
  bool contained = false;
  bool corner_in_translate = false;  // (alpha(k-1), 0) itself
  std::size_t points = 0;
};

// Lattice points of the alpha-region, minus the corner (alpha(k-1), 0), lie in
// the beta-region translated by -(alpha(k+1), alpha(k)).
inline SupportComparison support_comparison(int b, int c, std::int64_t k) {
  if (k < 0) throw out_of_range("k must be nonnegative");
  const detail::Oriented o(b, c);
  const SequenceContext s = sequences(o.cb, o.cc, k, k);
  const int rb = s.r(k - 1), rc = s.r(k);
  const int aa1 = detail::narrow(s.alpha(k)), aa2 = detail::narrow(s.alpha(k - 1));
  const int ba1 = detail::narrow(s.beta(k)), ba2 = detail::narrow(s.beta(k - 1));
  if (!is_imaginary(rb, rc, {aa1, aa2}) || !is_imaginary(rb, rc, {ba1, ba2}))
    throw not_imaginary_root("support comparison indices must be imaginary roots");
  const int d1 = detail::narrow(s.alpha(k + 1)), d2 = aa1;
  const RegionP alpha_region(rb, rc, aa1, aa2);
  const RegionP beta_region(rb, rc, ba1, ba2);
  SupportComparison out;
  out.contained = true;
  for (const auto& [p, q] : region_lattice_points(alpha_region)) {
    if (p == aa2 && q == 0) continue;
    ++out.points;
    if (!beta_region.contains(p + d1, q + d2)) out.contained = false;
  }
  out.corner_in_translate = beta_region.contains(aa2 + d1, d2);
  return out;
}

inline bool check_support_comparison(int b, int c, std::int64_t k) { return support_comparison(b, c, k).contained; }

// First k at which the beta-path contains a translated copy of the alpha-path.
inline std::int64_t same_shape_first_k(int b, int c) { return std::min(b, c) > 1 ? 1 : 2; }

struct SameShapeReport {
  bool b_above = false, c_above = false;
  bool b_prime_position = false, b_prime_below = false;
  bool g_prime_below = false, h_prime_below = false;
  bool on_path = false;
  std::string corner_word;  // B -> G' -> H' -> C
  std::string alpha_word;

  bool pass() const {
    return b_above && c_above && b_prime_position && b_prime_below && g_prime_below && h_prime_below && on_path &&
           corner_word == alpha_word;
  }
};

// With B = (alpha(k), alpha(k-1)), C = 2B, G' = B + (1,0), H' = C - (0,1) in
// the beta-path: the path B G' ... H' C has the step word of the alpha-path.
inline SameShapeReport same_shape(int b, int c, std::int64_t k) {
  const detail::Oriented o(b, c);
  if (k < same_shape_first_k(o.cb, o.cc))
    throw range_violated("same-shape statement needs k >= " + std::to_string(same_shape_first_k(o.cb, o.cc)));
  const SequenceContext s = sequences(o.cb, o.cc, k, k);
  const int al = detail::narrow(s.alpha(k)), al1 = detail::narrow(s.alpha(k - 1));
  const int be = detail::narrow(s.beta(k)), be1 = detail::narrow(s.beta(k - 1));
  const DyckPath big = max_dyck_path(be, be1);
  const DyckPath small = max_dyck_path(al, al1);

  // sign of y * beta(k) - x * beta(k-1): > 0 above the diagonal
  auto side = [&](std::int64_t x, std::int64_t y) { return y * be - x * std::int64_t{be1}; };
  const PathPoint B{al, al1}, C{2 * al, 2 * al1}, G{al + 1, al1}, H{2 * al, 2 * al1 - 1};

  SameShapeReport r;
  r.b_above = side(B.x, B.y) > 0;
  r.c_above = side(C.x, C.y) > 0;
  const PathPoint b_prime = big.point(big.horizontal_step(al + 1));
  r.b_prime_position = b_prime == PathPoint{al, al1 - 1};
  r.b_prime_below = side(b_prime.x, b_prime.y) < 0;
  r.g_prime_below = side(G.x, G.y) < 0;
  r.h_prime_below = side(H.x, H.y) < 0;
  r.alpha_word = small.word();

  const auto gp = big.position_of(G);
  const auto hp = big.position_of(H);
  r.on_path = gp && hp && *gp <= *hp;
  if (r.on_path) {
    r.corner_word = "H";
    for (int t = *gp; t < *hp; ++t) r.corner_word.push_back(static_cast<char>(big.steps()[t]));
    r.corner_word.push_back('V');
  }
  return r;
}

inline bool check_same_shape(int b, int c, std::int64_t k) { return same_shape(b, c, k).pass(); }

// ---------------------------------------------------------------------------
// JSON reports: {"check","b","c","k","pass","min_coeff","skipped","millis", ...}

inline nlohmann::json check_record(const std::string& check, int b, int c, std::int64_t k, bool pass,
                                   const std::optional<BigInt>& min_coeff, bool skipped, double millis) {
  nlohmann::json j;
  j["check"] = check;
  j["b"] = b;
  j["c"] = c;
  j["k"] = k;
  j["pass"] = pass;
  j["min_coeff"] = min_coeff ? nlohmann::json(min_coeff->str()) : nlohmann::json(nullptr);
  j["skipped"] = skipped;
  j["millis"] = static_cast<std::int64_t>(millis);
  return j;
}

inline nlohmann::json index_json(RootVector v) { return nlohmann::json::array({v.a1, v.a2}); }

inline nlohmann::json to_json(const PkReport& r) {
  const auto& ix = r.indices;
  nlohmann::json j = check_record("p-positive", ix.b, ix.c, ix.k, r.pass, r.min_coeff, false, r.millis);
  j["branch"] = ix.branch;
  j["algebra"] = nlohmann::json::array({ix.alg_b, ix.alg_c});
  j["beta"] = index_json(ix.beta);
  j["gamma"] = index_json(ix.gamma);
  j["alpha"] = index_json(ix.alpha);
  j["support_size"] = r.support_size;
  return j;
}

inline nlohmann::json to_json(const MuReport& r, double millis) {
  std::optional<BigInt> none;
  nlohmann::json j = check_record("mu", r.b, r.c, r.k, r.pass(), none, false, millis);
  j["algebra"] = nlohmann::json::array({r.alg_b, r.alg_c});
  j["domain"] = nlohmann::json::array({r.domain_a1, r.domain_a2});
  j["image"] = nlohmann::json::array({r.image_a1, r.image_a2});
  j["domain_size"] = r.domain_size;
  j["image_failures"] = r.image_failures;
  j["collisions"] = r.collisions;
  j["size_violations"] = r.size_violations;
  j["excluded_found"] = r.excluded_found;
  j["excluded_image_compatible"] = r.excluded_image_compatible;
  return j;
}

// Runs a check, converting too_large into a skipped record.
template <class F>
nlohmann::json guarded_record(const std::string& check, int b, int c, std::int64_t k, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    return body();
  } catch (const too_large&) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return check_record(check, b, c, k, false, std::nullopt, true, ms);
  }
}

inline nlohmann::json pk_record(int b, int c, std::int64_t k, const EnumerationOptions& opt) {
  return guarded_record("p-positive", b, c, k, [&] { return to_json(check_pk_positive(b, c, k, opt)); });
}

inline nlohmann::json split_record(const std::string& name, int b, int c, std::int64_t k,
                                   const EnumerationOptions& opt) {
  return guarded_record(name, b, c, k, [&] {
    SplitReport r;
    const double ms = detail::time_ms([&] {
      r = name == "eq2" ? split_first_summand(b, c, k, opt) : split_second_summand(b, c, k, opt);
    });
    nlohmann::json j = check_record(name, b, c, k, r.pass, r.min_coeff, false, ms);
    if (name == "eq2") j["monomial_coeff"] = r.monomial_coefficient.str();
    return j;
  });
}

inline nlohmann::json mu_record(int b, int c, std::int64_t k, const EnumerationOptions& opt) {
  return guarded_record("mu", b, c, k, [&] {
    MuReport r;
    const double ms = detail::time_ms([&] { r = mu_map(b, c, k, opt); });
    return to_json(r, ms);
  });
}

// Recursively drops "millis" so reports can be compared across runs.
inline nlohmann::json without_timings(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("millis");
    for (auto& [key, value] : j.items()) value = without_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_timings(value);
  }
  return j;
}

inline nlohmann::json to_json(const GreedyElement& g) {
  nlohmann::json grid = nlohmann::json::array();
  for (int p = 0; p <= g.a2; ++p) {
    nlohmann::json row = nlohmann::json::array();
    for (int q = 0; q <= g.a1; ++q) row.push_back(g.grid.at(p, q).str());
    grid.push_back(std::move(row));
  }
  return {{"b", g.b}, {"c", g.c}, {"a1", g.a1}, {"a2", g.a2}, {"grid", std::move(grid)}, {"laurent", to_json(g.laurent)}};
}

}  // namespace rank2
