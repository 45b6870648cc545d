#pragma once

// Sparse Laurent polynomials in two variables x1, x2 with arbitrary-precision
// integer coefficients.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

using BigInt = boost::multiprecision::cpp_int;

struct ExponentPair {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;

  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

  ExponentPair operator+(const ExponentPair& o) const { return {e1 + o.e1, e2 + o.e2}; }
  ExponentPair operator-(const ExponentPair& o) const { return {e1 - o.e1, e2 - o.e2}; }
};

// Terms are kept in a std::map ordered lexicographically by (e1, e2); zero
// coefficients are never stored.
class LaurentPoly2 {
 public:
  using TermMap = std::map<ExponentPair, BigInt>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(const BigInt& c) { return monomial({0, 0}, c); }

  static LaurentPoly2 monomial(ExponentPair e, const BigInt& c = 1) {
    LaurentPoly2 p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly2 x1(std::int64_t power = 1) { return monomial({power, 0}); }
  static LaurentPoly2 x2(std::int64_t power = 1) { return monomial({0, power}); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(ExponentPair e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(ExponentPair e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly2& operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly2 operator-() const {
    LaurentPoly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  LaurentPoly2 pow(unsigned n) const {
    LaurentPoly2 result = constant(1);
    LaurentPoly2 base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  // Multiply by the monomial x1^e1 x2^e2.
  LaurentPoly2 shifted(ExponentPair by) const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
  }

  LaurentPoly2 scaled(const BigInt& k) const {
    if (k == 0) return {};
    LaurentPoly2 r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
  }

  // Exchange the roles of x1 and x2.
  LaurentPoly2 swapped() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(ExponentPair{e.e2, e.e1}, c);
    return r;
  }

  ExponentPair min_exponents() const {
    if (is_zero()) throw empty_polynomial();
    ExponentPair m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.e1 = std::min(m.e1, e.e1);
      m.e2 = std::min(m.e2, e.e2);
    }
    return m;
  }

  ExponentPair max_exponents() const {
    if (is_zero()) throw empty_polynomial();
    ExponentPair m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.e1 = std::max(m.e1, e.e1);
      m.e2 = std::max(m.e2, e.e2);
    }
    return m;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = (e.e1 == 0 && e.e2 == 0);
      if (mag != 1 || unit) {
        os << mag;
        if (!unit) os << "*";
      }
      bool need_star = false;
      if (e.e1 != 0) {
        os << "x1";
        if (e.e1 != 1) os << "^" << e.e1;
        need_star = true;
      }
      if (e.e2 != 0) {
        if (need_star) os << "*";
        os << "x2";
        if (e.e2 != 1) os << "^" << e.e2;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline LaurentPoly2 lp_add(const LaurentPoly2& f, const LaurentPoly2& g) { return f + g; }
inline LaurentPoly2 lp_mul(const LaurentPoly2& f, const LaurentPoly2& g) { return f * g; }

// Exact quotient f / g. Throws not_divisible when no Laurent polynomial q with
// q * g == f exists.
//
// The divisor is shifted so that its lexicographically smallest term sits at
// the origin; lex order is a group order on Z^2, so the smallest term of a
// product is the product of the smallest terms and quotient terms can be
// peeled off in ascending order. Every quotient exponent must also lie in the
// box [min(f) - min(g), max(f) - max(g)] (coordinatewise, Newton polygons add
// under multiplication), which bounds the loop.
inline LaurentPoly2 lp_exact_div(const LaurentPoly2& f, const LaurentPoly2& g) {
  if (g.is_zero()) throw empty_polynomial();
  if (f.is_zero()) return {};

  const ExponentPair shift = g.terms().begin()->first;
  const LaurentPoly2 divisor = g.shifted({-shift.e1, -shift.e2});
  const BigInt& lead = divisor.terms().begin()->second;

  const ExponentPair lo = f.min_exponents() - divisor.min_exponents();
  const ExponentPair hi = f.max_exponents() - divisor.max_exponents();
  if (lo.e1 > hi.e1 || lo.e2 > hi.e2) throw not_divisible();

  LaurentPoly2 remainder = f;
  LaurentPoly2 quotient;
  while (!remainder.is_zero()) {
    const auto& [e, c] = *remainder.terms().begin();
    if (e.e1 < lo.e1 || e.e1 > hi.e1 || e.e2 < lo.e2 || e.e2 > hi.e2) throw not_divisible();
    BigInt q, r;
    boost::multiprecision::divide_qr(c, lead, q, r);
    if (r != 0) throw not_divisible();
    const ExponentPair qe = e;
    quotient.add_term(qe, q);
    remainder -= divisor.shifted(qe).scaled(q);
  }
  return quotient.shifted({-shift.e1, -shift.e2});
}

// Minimum stored coefficient; "positive" means this is > 0.
inline BigInt lp_min_coefficient(const LaurentPoly2& f) {
  if (f.is_zero()) throw empty_polynomial();
  BigInt m = f.terms().begin()->second;
  for (const auto& [e, c] : f.terms()) m = std::min(m, c);
  return m;
}

// Returns (a1, a2) when f = x1^-a1 x2^-a2 * sum_{p,q>=0} c(p,q) x1^{bp} x2^{cq}
// with c(0,0) = 1.
inline std::optional<ExponentPair> lp_pointed_at(const LaurentPoly2& f, int b, int c) {
  if (f.is_zero() || b < 1 || c < 1) return std::nullopt;
  const ExponentPair m = f.min_exponents();
  if (f.coefficient(m) != 1) return std::nullopt;
  for (const auto& [e, coeff] : f.terms()) {
    if ((e.e1 - m.e1) % b != 0 || (e.e2 - m.e2) % c != 0) return std::nullopt;
  }
  return ExponentPair{-m.e1, -m.e2};
}

inline nlohmann::json to_json(const LaurentPoly2& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back({{"e1", e.e1}, {"e2", e.e2}, {"coeff", c.str()}});
  return {{"terms", std::move(terms)}};
}

inline LaurentPoly2 laurent_from_json(const nlohmann::json& j) {
  LaurentPoly2 f;
  for (const auto& t : j.at("terms")) {
    BigInt c(t.at("coeff").get<std::string>());
    f.add_term({t.at("e1").get<std::int64_t>(), t.at("e2").get<std::int64_t>()}, c);
  }
  return f;
}

}  // namespace rank2
