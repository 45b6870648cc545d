#pragma once

// Cluster variables of A(b,c) expanded in the initial cluster {x1, x2}, and
// the automorphisms sigma_1, sigma_2 acting by substitution.

#include <cstdint>
#include <map>

#include "rank2/greedy.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

// Exponent in x_{m-1} x_{m+1} = x_m^e + 1: b for odd m, c for even m.
inline int exchange_exponent(int b, int c, std::int64_t m) { return (m % 2 != 0) ? b : c; }

// Memo table of x_m; grows in both directions from {x1, x2} on demand.
// Not thread-safe while growing.
class ClusterVarTable {
 public:
  ClusterVarTable(int b, int c) : b_(b), c_(c) {
    if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
    vars_.emplace(1, LaurentPoly2::x1());
    vars_.emplace(2, LaurentPoly2::x2());
  }

  int b() const { return b_; }
  int c() const { return c_; }

  const LaurentPoly2& get(std::int64_t m) {
    while (vars_.rbegin()->first < m) {
      const std::int64_t top = vars_.rbegin()->first;  // x_{top+1} = (x_top^e + 1) / x_{top-1}
      vars_.emplace(top + 1, step(top, vars_.at(top - 1)));
    }
    while (vars_.begin()->first > m) {
      const std::int64_t bottom = vars_.begin()->first;  // x_{bottom-1} = (x_bottom^e + 1) / x_{bottom+1}
      vars_.emplace(bottom - 1, step(bottom, vars_.at(bottom + 1)));
    }
    return vars_.at(m);
  }

  std::int64_t lowest() const { return vars_.begin()->first; }
  std::int64_t highest() const { return vars_.rbegin()->first; }

 private:
  LaurentPoly2 step(std::int64_t m, const LaurentPoly2& other_neighbour) const {
    const LaurentPoly2 numerator = vars_.at(m).pow(static_cast<unsigned>(exchange_exponent(b_, c_, m))) +
                                   LaurentPoly2::constant(1);
    return lp_exact_div(numerator, other_neighbour);
  }

  int b_, c_;
  std::map<std::int64_t, LaurentPoly2> vars_;
};

inline LaurentPoly2 cluster_variable(int b, int c, std::int64_t m) {
  ClusterVarTable t(b, c);
  return t.get(m);
}

// sigma_1: x1 -> x1, x2 -> (x1^b + 1)/x2
// sigma_2: x1 -> (x2^c + 1)/x1, x2 -> x2
// Computed as N / (x^b + 1)^s with a polynomial numerator N, followed by one
// exact division; a nonzero remainder means f was not in the algebra.
inline LaurentPoly2 sigma_apply(int b, int c, int ell, const LaurentPoly2& f) {
  if (ell != 1 && ell != 2) throw out_of_range("sigma index must be 1 or 2");
  if (f.is_zero()) return {};
  // For ell = 1 the substituted variable is x2 and the binomial lives in x1.
  const bool sub_second = ell == 1;
  const LaurentPoly2 binomial =
      sub_second ? LaurentPoly2::x1(b) + LaurentPoly2::constant(1) : LaurentPoly2::x2(c) + LaurentPoly2::constant(1);
  std::int64_t min_exp = 0;
  for (const auto& [e, coeff] : f.terms()) min_exp = std::min(min_exp, sub_second ? e.e2 : e.e1);
  const std::int64_t s = -min_exp;

  std::map<std::int64_t, LaurentPoly2> binomial_powers;
  auto power = [&](std::int64_t n) -> const LaurentPoly2& {
    auto it = binomial_powers.find(n);
    if (it == binomial_powers.end()) it = binomial_powers.emplace(n, binomial.pow(static_cast<unsigned>(n))).first;
    return it->second;
  };

  LaurentPoly2 numerator;
  for (const auto& [e, coeff] : f.terms()) {
    const std::int64_t j = sub_second ? e.e2 : e.e1;
    // x^j -> binomial^j * x^-j, times the common denominator binomial^s
    const ExponentPair mono = sub_second ? ExponentPair{e.e1, -j} : ExponentPair{-j, e.e2};
    numerator += power(j + s).shifted(mono).scaled(coeff);
  }
  if (s == 0) return numerator;
  try {
    return lp_exact_div(numerator, power(s));
  } catch (const not_divisible&) {
    throw not_laurent();
  }
}

// The image index of x[a1,a2] under sigma_ell:
//   sigma_1: (a1, c [a1]_+ - a2),  sigma_2: (b [a2]_+ - a1, a2)
inline RootVector sigma_image(int b, int c, int ell, RootVector v) {
  auto pos = [](std::int64_t a) { return std::max<std::int64_t>(a, 0); };
  if (ell == 1) return {v.a1, c * pos(v.a1) - v.a2};
  if (ell == 2) return {b * pos(v.a2) - v.a1, v.a2};
  throw out_of_range("sigma index must be 1 or 2");
}

// sigma_ell(x[v]) == x[sigma_image(v)], both sides computed independently.
inline bool verify_sigma_on_greedy(int b, int c, RootVector v, int ell, const EnumerationOptions& opt = {}) {
  const RootVector image = sigma_image(b, c, ell, v);
  if (image.a1 < 0 || image.a2 < 0) throw negative_index(static_cast<int>(image.a1), static_cast<int>(image.a2));
  const LaurentPoly2 lhs = sigma_apply(b, c, ell, greedy_element(b, c, static_cast<int>(v.a1), static_cast<int>(v.a2), opt).laurent);
  const LaurentPoly2 rhs = greedy_element(b, c, static_cast<int>(image.a1), static_cast<int>(image.a2), opt).laurent;
  return lhs == rhs;
}

}  // namespace rank2
