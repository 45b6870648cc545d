#pragma once

// Cartan data A(b,c), the invariant quadratic form, imaginary roots, the Weyl
// group action on Z^2 and the integer sequences a(k), alpha(k), beta(k),
// gamma(k) that index the W-translates of the element p.
//
// Root coordinates follow the convention (a1, a2) with alpha_1 = (0,1) and
// alpha_2 = (1,0); s1(a1,a2) = (a1, c a1 - a2), s2(a1,a2) = (b a2 - a1, a2).

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

enum class CartanKind { finite, affine, wild };

struct CartanParams {
  int b = 1;
  int c = 1;

  CartanParams(int b_, int c_) : b(b_), c(c_) {
    if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
  }

  CartanKind kind() const {
    const int bc = b * c;
    return bc < 4 ? CartanKind::finite : bc == 4 ? CartanKind::affine : CartanKind::wild;
  }
  bool wild() const { return kind() == CartanKind::wild; }
  CartanParams mirrored() const { return {c, b}; }
};

inline std::string to_string(CartanKind k) {
  switch (k) {
    case CartanKind::finite: return "finite";
    case CartanKind::affine: return "affine";
    case CartanKind::wild: return "wild";
  }
  return "?";
}

struct RootVector {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  RootVector swapped() const { return {a2, a1}; }
};

inline std::ostream& operator<<(std::ostream& os, const RootVector& v) {
  return os << "(" << v.a1 << "," << v.a2 << ")";
}

// Q(a1, a2) = c a1^2 - bc a1 a2 + b a2^2
inline BigInt quadratic_form(int b, int c, RootVector v) {
  const BigInt a1 = v.a1, a2 = v.a2;
  return BigInt(c) * a1 * a1 - BigInt(b) * c * a1 * a2 + BigInt(b) * a2 * a2;
}

// Positive imaginary root: a1, a2 > 0 and Q <= 0 (Q never vanishes on Z^2 in
// the wild case, so there the test is effectively strict).
inline bool is_imaginary(int b, int c, RootVector v) {
  return v.a1 > 0 && v.a2 > 0 && quadratic_form(b, c, v) <= 0;
}

// 2x2 integer matrix acting on column vectors (a1, a2).
struct Mat2 {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};  // row-major

  static Mat2 identity() { return {}; }

  RootVector apply(RootVector v) const {
    return {m[0] * v.a1 + m[1] * v.a2, m[2] * v.a1 + m[3] * v.a2};
  }
  std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 simple_reflection(int b, int c, int i) {
  if (i == 1) return {{1, 0, c, -1}};
  if (i == 2) return {{-1, b, 0, 1}};
  throw out_of_range("reflection index must be 1 or 2");
}

inline RootVector reflect(int b, int c, int i, RootVector v) {
  return simple_reflection(b, c, i).apply(v);
}

struct WeylWord {
  int branch = 1;  // rightmost factor is s_branch
  int length = 0;
  Mat2 matrix;

  RootVector apply(RootVector v) const { return matrix.apply(v); }
};

// w(1;k) = ... s2 s1 (k factors, s1 rightmost), w(2;k) = ... s1 s2.
inline WeylWord weyl_word(int b, int c, int branch, int k) {
  if (branch != 1 && branch != 2) throw out_of_range("Weyl word branch must be 1 or 2");
  if (k < 0) throw out_of_range("Weyl word length must be nonnegative");
  WeylWord w{branch, k, Mat2::identity()};
  int next = branch;
  for (int n = 0; n < k; ++n) {
    w.matrix = simple_reflection(b, c, next) * w.matrix;
    next = 3 - next;
  }
  return w;
}

// r_k = b for odd k, c for even k.
inline int r_of(int b, int c, std::int64_t k) { return (k % 2 != 0) ? b : c; }

// Sequence a(k) with a(-1) = a2, a(0) = a1 and a(k) = r_{k-1} a(k-1) - a(k-2),
// extended to k < -1 by the same relation.
class Sequence {
 public:
  Sequence() = default;
  Sequence(int b, int c, BigInt a0, BigInt a_minus1, std::int64_t k_min, std::int64_t k_max)
      : k_min_(std::min<std::int64_t>(k_min, -1)), k_max_(std::max<std::int64_t>(k_max, 0)) {
    values_.resize(static_cast<std::size_t>(k_max_ - k_min_ + 1));
    at_ref(0) = std::move(a0);
    at_ref(-1) = std::move(a_minus1);
    for (std::int64_t k = 1; k <= k_max_; ++k) at_ref(k) = r_of(b, c, k - 1) * at_ref(k - 1) - at_ref(k - 2);
    // a(k-2) = r_{k-1} a(k-1) - a(k)
    for (std::int64_t k = -2; k >= k_min_; --k) at_ref(k) = r_of(b, c, k + 1) * at_ref(k + 1) - at_ref(k + 2);
  }

  const BigInt& operator()(std::int64_t k) const {
    if (k < k_min_ || k > k_max_) throw out_of_range("sequence index " + std::to_string(k) + " outside window");
    return values_[static_cast<std::size_t>(k - k_min_)];
  }

  std::int64_t k_min() const { return k_min_; }
  std::int64_t k_max() const { return k_max_; }

 private:
  BigInt& at_ref(std::int64_t k) { return values_[static_cast<std::size_t>(k - k_min_)]; }

  std::int64_t k_min_ = -1;
  std::int64_t k_max_ = 0;
  std::vector<BigInt> values_;
};

enum class SequenceCase { generic, c_is_one };

// alpha, beta, gamma over a window, for b >= c (inputs with b < c must be
// mirrored by the caller).
struct SequenceContext {
  int b = 0;
  int c = 0;
  SequenceCase kind = SequenceCase::generic;
  Sequence alpha, beta, gamma;

  int r(std::int64_t k) const { return r_of(b, c, k); }
};

inline SequenceContext sequences(int b, int c, std::int64_t k_min, std::int64_t k_max) {
  if (b < 1 || c < 1) throw out_of_range("Cartan parameters must be positive");
  if (b < c) throw out_of_range("sequences require min(b,c) = c; mirror the input first");
  SequenceContext ctx;
  ctx.b = b;
  ctx.c = c;
  ctx.kind = c == 1 ? SequenceCase::c_is_one : SequenceCase::generic;
  // widen by two on each side so that identities can look at k-2 .. k+1
  const std::int64_t lo = k_min - 3, hi = k_max + 2;
  if (ctx.kind == SequenceCase::generic) {
    ctx.alpha = Sequence(b, c, 1, 1, lo, hi);
    ctx.beta = Sequence(b, c, BigInt((c - 1) * b + 1), BigInt(c + 1), lo, hi);
    ctx.gamma = Sequence(b, c, BigInt(b + 1), BigInt((b - 1) * c + 1), lo, hi);
  } else {
    ctx.alpha = Sequence(b, c, 2, 1, lo, hi);
    ctx.beta = Sequence(b, c, BigInt(b + 2), 3, lo, hi);
    ctx.gamma = Sequence(b, c, BigInt(b + 2), BigInt(b - 1), lo, hi);
  }
  return ctx;
}

// Common value of the determinant identities; requires wild, b >= c.
inline int delta(int b, int c) {
  if (b * c <= 4) throw not_wild(b, c);
  if (b < c) throw out_of_range("delta requires min(b,c) = c");
  return c > 1 ? b * c - b - c : b - 4;
}

struct IdentityCheck {
  std::int64_t k = 0;
  std::string name;
  bool pass = false;
};

struct IdentityReport {
  int b = 0, c = 0;           // as requested
  bool mirrored = false;      // computed on (c, b)
  std::int64_t k_min = 0, k_max = 0;
  int delta = 0;
  std::vector<IdentityCheck> checks;

  bool all_pass() const {
    for (const auto& ch : checks)
      if (!ch.pass) return false;
    return true;
  }
};

// Evaluates the sequence identities over [k_min, k_max]:
//   2 alpha(k-2) + alpha(k) = beta(k-2)
//   alpha(k-1) + r_k alpha(k) = beta(k-1)
//   2 r_k alpha(k) - alpha(k-1) = gamma(k+1)
//   alpha(k) + r_{k-1} alpha(k-1) = gamma(k)
//   alpha(k-1) beta(k) - alpha(k) beta(k-1) = alpha(k) gamma(k-1) - alpha(k-1) gamma(k)
//     = r_{k-1} alpha(k-1) alpha(k+1) - r_k alpha(k)^2
//     = bc alpha(k-1) alpha(k) - r_{k-1} alpha(k-1)^2 - r_k alpha(k)^2 = delta(b,c)
//   alpha(k) < beta(k) for k >= 0
inline IdentityReport evaluate_identities(int b, int c, std::int64_t k_min, std::int64_t k_max) {
  IdentityReport rep;
  rep.b = b;
  rep.c = c;
  rep.k_min = k_min;
  rep.k_max = k_max;
  if (b * c <= 4) throw not_wild(b, c);
  if (b < c) {
    std::swap(b, c);
    rep.mirrored = true;
  }
  rep.delta = delta(b, c);
  const SequenceContext s = sequences(b, c, k_min, k_max);
  const auto& al = s.alpha;
  const auto& be = s.beta;
  const auto& ga = s.gamma;
  const BigInt d = rep.delta;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const BigInt rk = s.r(k), rk1 = s.r(k - 1), bc = BigInt(b) * c;
    auto add = [&](const char* name, bool ok) { rep.checks.push_back({k, name, ok}); };
    add("alpha-beta shift 2", 2 * al(k - 2) + al(k) == be(k - 2));
    add("alpha-beta shift 1", al(k - 1) + rk * al(k) == be(k - 1));
    add("alpha-gamma forward", 2 * rk * al(k) - al(k - 1) == ga(k + 1));
    add("alpha-gamma current", al(k) + rk1 * al(k - 1) == ga(k));
    add("det alpha-beta", al(k - 1) * be(k) - al(k) * be(k - 1) == d);
    add("det alpha-gamma", al(k) * ga(k - 1) - al(k - 1) * ga(k) == d);
    add("det alpha shift", rk1 * al(k - 1) * al(k + 1) - rk * al(k) * al(k) == d);
    add("alpha quadratic", bc * al(k - 1) * al(k) - rk1 * al(k - 1) * al(k - 1) - rk * al(k) * al(k) == d);
    if (k >= 0) add("alpha below beta", al(k) < be(k));
  }
  return rep;
}

// Throwing form: identity_violated on the first failure.
inline IdentityReport check_identities(int b, int c, std::int64_t k_min, std::int64_t k_max) {
  IdentityReport rep = evaluate_identities(b, c, k_min, k_max);
  for (const auto& ch : rep.checks)
    if (!ch.pass) throw identity_violated(ch.k, ch.name);
  return rep;
}

}  // namespace rank2
