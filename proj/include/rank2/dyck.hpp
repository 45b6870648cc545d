#pragma once

// Maximal Dyck paths, compatible pairs of edge subsets, and the enumeration
// of compatible pairs that produces greedy-element coefficients.
//
// Conventions: horizontal edges u_1..u_{a1} are numbered left to right and
// vertical edges v_1..v_{a2} bottom to top. In masks, bit (i-1) stands for
// u_i (resp. v_i). Steps are numbered 0..L-1 with L = a1 + a2; step t runs from
// path point t to path point t+1, and point L is identified with point 0.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/laurent.hpp"

namespace rank2 {

enum class Step : char { horizontal = 'H', vertical = 'V' };

struct PathPoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const PathPoint&, const PathPoint&) = default;
};

using EdgeMask = std::uint64_t;

constexpr EdgeMask low_bits(int n) { return n >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1; }
constexpr bool has_edge(EdgeMask m, int index) { return (m >> (index - 1)) & 1u; }

// Subsets of horizontal (s1) and vertical (s2) edges.
struct SubsetPair {
  EdgeMask s1 = 0;
  EdgeMask s2 = 0;
  int size1() const { return std::popcount(s1); }
  int size2() const { return std::popcount(s2); }
  friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

// An edge set of a path, e.g. the edges of a subpath.
struct EdgeSet {
  EdgeMask horizontal = 0;
  EdgeMask vertical = 0;
  int size() const { return std::popcount(horizontal) + std::popcount(vertical); }
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};


class DyckPath {
 public:
  DyckPath() = default;

  DyckPath(int a1, int a2, std::vector<Step> steps) : a1_(a1), a2_(a2), steps_(std::move(steps)) {
    if (a1 < 0 || a2 < 0) throw out_of_range("negative path extent");
    const auto h = std::count(steps_.begin(), steps_.end(), Step::horizontal);
    if (h != a1 || static_cast<int>(steps_.size()) - h != a2)
      throw out_of_range("step word does not match the extents");
    points_.assign(1, PathPoint{});
    points_.reserve(steps_.size() + 1);
    PathPoint p;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
      if (steps_[t] == Step::horizontal) {
        ++p.x;
        horizontal_steps_.push_back(static_cast<int>(t));
      } else {
        ++p.y;
        vertical_steps_.push_back(static_cast<int>(t));
      }
      points_.push_back(p);
    }
  }

  int a1() const noexcept { return a1_; }
  int a2() const noexcept { return a2_; }
  int length() const noexcept { return a1_ + a2_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  std::string word() const {
    std::string w;
    for (Step s : steps_) w.push_back(static_cast<char>(s));
    return w;
  }

  // Point at position pos in [0, L].
  PathPoint point(int pos) const { return points_.at(pos); }

  // Step index of u_i / v_j (1-based edge indices).
  int horizontal_step(int i) const { return horizontal_steps_.at(i - 1); }
  int vertical_step(int j) const { return vertical_steps_.at(j - 1); }

  // Height (y coordinate) of horizontal edge u_i.
  int height_of_horizontal(int i) const { return points_[horizontal_step(i)].y; }

  // Position in [0, L) with (a1, a2) identified with (0, 0).
  std::optional<int> position_of(PathPoint p) const {
    if (p.x == a1_ && p.y == a2_) return 0;
    const int pos = p.x + p.y;
    if (p.x < 0 || p.y < 0 || pos >= static_cast<int>(points_.size())) return std::nullopt;
    if (points_[pos] == p) return pos;
    return std::nullopt;
  }

  bool contains(PathPoint p) const { return position_of(p).has_value(); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.steps_ == b.steps_;
  }

 private:
  int a1_ = 0;
  int a2_ = 0;
  std::vector<Step> steps_;
  std::vector<PathPoint> points_{PathPoint{}};
  std::vector<int> horizontal_steps_;
  std::vector<int> vertical_steps_;
};

// Edge subsets are 64-bit masks, so mask-based operations need at most 64
// edges in each direction.
inline void require_mask_width(const DyckPath& path) {
  if (path.a1() > 64 || path.a2() > 64) throw out_of_range("path extent exceeds 64 edges per direction");
}

// The maximal Dyck path of type a1 x a2: after the i-th horizontal step it
// climbs to height floor(i * a2 / a1).
inline DyckPath max_dyck_path(int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw out_of_range("negative path extent");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(a1 + a2));
  if (a1 == 0) {
    steps.assign(static_cast<std::size_t>(a2), Step::vertical);
  } else {
    std::int64_t height = 0;
    for (std::int64_t i = 1; i <= a1; ++i) {
      steps.push_back(Step::horizontal);
      const std::int64_t next = i * a2 / a1;
      for (; height < next; ++height) steps.push_back(Step::vertical);
    }
  }
  return DyckPath(a1, a2, std::move(steps));
}

// Edges of the subpath AB (northeast from A to B, wrapping through (0,0)).
// AA is the full loop.
inline EdgeSet subpath_edges(const DyckPath& path, PathPoint a, PathPoint b) {
  require_mask_width(path);
  const auto pa = path.position_of(a);
  const auto pb = path.position_of(b);
  if (!pa) throw point_not_on_path(a.x, a.y);
  if (!pb) throw point_not_on_path(b.x, b.y);
  const PathPoint A = path.point(*pa);
  const PathPoint B = path.point(*pb);
  const EdgeSet all{low_bits(path.a1()), low_bits(path.a2())};
  if (*pa == *pb) return all;
  auto box = [](int x_lo, int x_hi, int y_lo, int y_hi) {
    // {u_k : x_lo < k <= x_hi} and {v_l : y_lo < l <= y_hi}
    return EdgeSet{low_bits(x_hi) & ~low_bits(x_lo), low_bits(y_hi) & ~low_bits(y_lo)};
  };
  if (*pa < *pb) return box(A.x, B.x, A.y, B.y);
  const EdgeSet cut = box(B.x, A.x, B.y, A.y);
  return {all.horizontal & ~cut.horizontal, all.vertical & ~cut.vertical};
}

namespace detail {

// Cyclic prefix counts over two laps of the path, used by the literal
// compatibility check.
struct LapCounts {
  std::vector<int> h, v, h_in, v_in;  // size 2L + 1

  LapCounts(const DyckPath& path, const SubsetPair& pair) {
    const int L = path.length();
    h.assign(2 * L + 1, 0);
    v = h_in = v_in = h;
    int hi = 0, vi = 0;
    std::vector<int> index(L);
    for (int t = 0; t < L; ++t)
      index[t] = path.steps()[t] == Step::horizontal ? ++hi : ++vi;
    for (int t = 0; t < 2 * L; ++t) {
      const int s = t % L;
      const bool horiz = path.steps()[s] == Step::horizontal;
      h[t + 1] = h[t] + horiz;
      v[t + 1] = v[t] + !horiz;
      h_in[t + 1] = h_in[t] + (horiz && has_edge(pair.s1, index[s]));
      v_in[t + 1] = v_in[t] + (!horiz && has_edge(pair.s2, index[s]));
    }
  }
};

inline int cyclic_length(int from, int to, int L) {
  const int d = ((to - from) % L + L) % L;
  return d == 0 ? L : d;
}

}  // namespace detail

// Compatibility of (S1, S2) checked literally: for every u in S1 and v in S2
// some interior point A of EF (E = left end of u, F = top of v) has
// |(AF)_1| = b |(AF)_2 & S2|  or  |(EA)_2| = c |(EA)_1 & S1|.
inline bool is_compatible(const DyckPath& path, const SubsetPair& pair, int b, int c) {
  require_mask_width(path);
  if (pair.s1 == 0 || pair.s2 == 0) return true;
  if ((pair.s1 & ~low_bits(path.a1())) || (pair.s2 & ~low_bits(path.a2())))
    throw out_of_range("subset pair has indices outside the path");
  const int L = path.length();
  const detail::LapCounts counts(path, pair);
  for (int i = 1; i <= path.a1(); ++i) {
    if (!has_edge(pair.s1, i)) continue;
    const int e = path.horizontal_step(i);
    for (int j = 1; j <= path.a2(); ++j) {
      if (!has_edge(pair.s2, j)) continue;
      const int f_pos = (path.vertical_step(j) + 1) % L;
      const int len = detail::cyclic_length(e, f_pos, L);
      const int f = e + len;
      bool separated = false;
      for (int a = e + 1; a < f && !separated; ++a) {
        const int af_h = counts.h[f] - counts.h[a];
        const int af_v_in = counts.v_in[f] - counts.v_in[a];
        const int ea_v = counts.v[a] - counts.v[e];
        const int ea_h_in = counts.h_in[a] - counts.h_in[e];
        separated = af_h == b * af_v_in || ea_v == c * ea_h_in;
      }
      if (!separated) return false;
    }
  }
  return true;
}

// Entry (p, q) counts compatible pairs with |S2| = p and |S1| = q.
class CoeffGrid {
 public:
  CoeffGrid() : CoeffGrid(0, 0) {}
  CoeffGrid(int a1, int a2)
      : a1_(a1), a2_(a2), counts_(static_cast<std::size_t>((a1 + 1) * (a2 + 1))) {}

  int a1() const noexcept { return a1_; }
  int a2() const noexcept { return a2_; }

  // p in [0, a2], q in [0, a1]
  const BigInt& at(int p, int q) const { return counts_.at(index(p, q)); }
  BigInt& at(int p, int q) { return counts_.at(index(p, q)); }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  friend bool operator==(const CoeffGrid&, const CoeffGrid&) = default;

 private:
  std::size_t index(int p, int q) const {
    if (p < 0 || p > a2_ || q < 0 || q > a1_) throw out_of_range("grid position out of range");
    return static_cast<std::size_t>(p * (a1_ + 1) + q);
  }

  int a1_;
  int a2_;
  std::vector<BigInt> counts_;
};

constexpr int default_enumeration_cap = 26;

namespace detail {

// Fast compatibility engine used by the enumeration.
//
// With u in S1 and v in S2, a separating point exists iff some interior A has
// f(AF) = b|(AF)_2 & S2| - |(AF)_1| <= 0 or g(EA) = c|(EA)_1 & S1| - |(EA)_2| <= 0
// (walking A from F back to E, f starts at b > 0 and drops by at most one per
// step, so it hits 0 before going negative; same for g). Hence only the
// nearest such point matters: reach_f(v) is the number of steps from F back
// to the first A with f <= 0, reach_g(u) the number of steps from E forward
// to the first A with g <= 0, and (u, v) is separated iff either reach is
// shorter than the length of EF. The <= form also shows that compatibility
// is inherited by subsets, which the enumeration uses for pruning.
class Scanner {
 public:
  Scanner(const DyckPath& path, int b, int c) : path_(path), b_(b), c_(c), L_(path.length()) {
    require_mask_width(path);
    is_h_.resize(L_);
    index_.resize(L_);
    int hi = 0, vi = 0;
    for (int t = 0; t < L_; ++t) {
      is_h_[t] = path.steps()[t] == Step::horizontal;
      index_[t] = is_h_[t] ? ++hi : ++vi;
    }
    e_pos_.assign(path.a1() + 1, 0);
    f_pos_.assign(path.a2() + 1, 0);
    for (int i = 1; i <= path.a1(); ++i) e_pos_[i] = path.horizontal_step(i);
    for (int j = 1; j <= path.a2(); ++j) f_pos_[j] = (path.vertical_step(j) + 1) % L_;
    len_.assign(static_cast<std::size_t>((path.a1() + 1) * (path.a2() + 1)), 0);
    for (int i = 1; i <= path.a1(); ++i)
      for (int j = 1; j <= path.a2(); ++j) len_[i * (path.a2() + 1) + j] = cyclic_length(e_pos_[i], f_pos_[j], L_);
  }

  int length(int i, int j) const { return len_[i * (path_.a2() + 1) + j]; }

  int reach_g(int i, EdgeMask s1) const {
    int acc = 0;
    int t = e_pos_[i];
    for (int d = 1; d < L_; ++d) {
      acc += is_h_[t] ? (has_edge(s1, index_[t]) ? c_ : 0) : -1;
      if (acc <= 0) return d;
      if (++t == L_) t = 0;
    }
    return L_;
  }

  int reach_f(int j, EdgeMask s2) const {
    int acc = 0;
    int t = f_pos_[j];
    for (int d = 1; d < L_; ++d) {
      t = t == 0 ? L_ - 1 : t - 1;
      acc += is_h_[t] ? -1 : (has_edge(s2, index_[t]) ? b_ : 0);
      if (acc <= 0) return d;
    }
    return L_;
  }

  bool compatible(const SubsetPair& pair) const {
    if (pair.s1 == 0 || pair.s2 == 0) return true;
    std::vector<int> rg(path_.a1() + 1, 0);
    for (EdgeMask m = pair.s1; m; m &= m - 1) {
      const int i = std::countr_zero(m) + 1;
      rg[i] = reach_g(i, pair.s1);
    }
    for (EdgeMask m = pair.s2; m; m &= m - 1) {
      const int j = std::countr_zero(m) + 1;
      const int rf = reach_f(j, pair.s2);
      for (EdgeMask n = pair.s1; n; n &= n - 1) {
        const int i = std::countr_zero(n) + 1;
        const int len = length(i, j);
        if (rf >= len && rg[i] >= len) return false;
      }
    }
    return true;
  }

  const DyckPath& path() const { return path_; }
  int b() const { return b_; }
  int c() const { return c_; }

 private:
  const DyckPath& path_;
  int b_, c_, L_;
  std::vector<char> is_h_;
  std::vector<int> index_;
  std::vector<int> e_pos_, f_pos_;
  std::vector<int> len_;
};

// Depth-first walk over all S2 compatible with a fixed S1, adding vertical
// edges in increasing index order and pruning at the first incompatible
// prefix.
class S2Walker {
 public:
  S2Walker(const Scanner& scanner, EdgeMask s1) : sc_(scanner) {
    const int a1 = scanner.path().a1();
    for (EdgeMask m = s1; m; m &= m - 1) members1_.push_back(std::countr_zero(m) + 1);
    reach_g_.assign(a1 + 1, 0);
    for (int i : members1_) reach_g_[i] = scanner.reach_g(i, s1);
  }

  template <class Visit>
  void run(Visit&& visit) {
    visit(EdgeMask{0});
    descend(EdgeMask{0}, 1, visit);
  }

 private:
  template <class Visit>
  void descend(EdgeMask s2, int from, Visit& visit) {
    const int a2 = sc_.path().a2();
    for (int j = from; j <= a2; ++j) {
      const EdgeMask next = s2 | (EdgeMask{1} << (j - 1));
      if (!accept(next)) continue;
      visit(next);
      descend(next, j + 1, visit);
    }
  }

  bool accept(EdgeMask s2) {
    if (members1_.empty()) return true;
    for (EdgeMask m = s2; m; m &= m - 1) {
      const int j = std::countr_zero(m) + 1;
      const int rf = sc_.reach_f(j, s2);
      for (int i : members1_) {
        const int len = sc_.length(i, j);
        if (rf >= len && reach_g_[i] >= len) return false;
      }
    }
    return true;
  }

  const Scanner& sc_;
  std::vector<int> members1_;
  std::vector<int> reach_g_;
};

inline void check_cap(const DyckPath& path, int cap) {
  if (path.length() > cap) throw too_large(path.length(), cap);
  if (path.a1() > 40) throw too_large(path.length(), cap);
}

}  // namespace detail

// Calls visit(pair) for every compatible pair, in a fixed order.
template <class Visit>
void for_each_compatible_pair(const DyckPath& path, int b, int c, Visit&& visit,
                              int cap = default_enumeration_cap) {
  detail::check_cap(path, cap);
  const detail::Scanner scanner(path, b, c);
  const EdgeMask s1_count = EdgeMask{1} << path.a1();
  for (EdgeMask s1 = 0; s1 < s1_count; ++s1) {
    detail::S2Walker walker(scanner, s1);
    walker.run([&](EdgeMask s2) { visit(SubsetPair{s1, s2}); });
  }
}

inline std::vector<SubsetPair> list_compatible_pairs(const DyckPath& path, int b, int c,
                                                     int cap = default_enumeration_cap) {
  std::vector<SubsetPair> out;
  for_each_compatible_pair(path, b, c, [&](const SubsetPair& p) { out.push_back(p); }, cap);
  return out;
}

inline unsigned default_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Counts compatible pairs by (|S2|, |S1|). The S1 space is split into chunks
// handed out to worker threads; each worker fills a private table and the
// tables are summed at the end, so the result does not depend on threads.
inline CoeffGrid enumerate_compatible_pairs(const DyckPath& path, int b, int c,
                                            int cap = default_enumeration_cap,
                                            unsigned threads = default_thread_count()) {
  detail::check_cap(path, cap);
  const int a1 = path.a1();
  const int a2 = path.a2();
  const detail::Scanner scanner(path, b, c);
  const std::uint64_t s1_count = std::uint64_t{1} << a1;
  const std::size_t cells = static_cast<std::size_t>((a1 + 1) * (a2 + 1));

  threads = std::max(1u, threads);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, s1_count / (16ull * threads));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(cells, 0));

  auto work = [&](unsigned w) {
    auto& table = partial[w];
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= s1_count) break;
      const std::uint64_t end = std::min(s1_count, begin + chunk);
      for (std::uint64_t s1 = begin; s1 < end; ++s1) {
        const int q = std::popcount(s1);
        detail::S2Walker walker(scanner, s1);
        walker.run([&](EdgeMask s2) { ++table[std::popcount(s2) * (a1 + 1) + q]; });
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  CoeffGrid grid(a1, a2);
  for (int p = 0; p <= a2; ++p)
    for (int q = 0; q <= a1; ++q) {
      std::uint64_t sum = 0;
      for (const auto& t : partial) sum += t[p * (a1 + 1) + q];
      grid.at(p, q) = sum;
    }
  return grid;
}

// First s1 horizontal edges and last s2 vertical edges.
inline SubsetPair extremal_pair(const DyckPath& path, int s1, int s2) {
  require_mask_width(path);
  if (s1 < 0 || s1 > path.a1() || s2 < 0 || s2 > path.a2())
    throw out_of_range("extremal pair size out of range");
  return {low_bits(s1), low_bits(path.a2()) & ~low_bits(path.a2() - s2)};
}

// a1 p + a2 q < a1 a2 + a1 + a2: every edge of the size-(q;p) extremal pair's
// S1 comes before every edge of its S2.
inline bool precedes(std::int64_t a1, std::int64_t a2, std::int64_t p, std::int64_t q) {
  return a1 * p + a2 * q < a1 * a2 + a1 + a2;
}

// Sufficient condition for compatibility of the size-(q;p) extremal pair:
// for every 1 <= p' <= p, 1 <= q' <= q one of
//   (b a2 - a1)(p'-1) - a2 (q'-1) > (b p - a1) a2
//   (c a1 - a2)(q'-1) - a1 (p'-1) > (c q - a2) a1
// holds.
inline bool extremal_fast_check(std::int64_t b, std::int64_t c, std::int64_t a1, std::int64_t a2,
                                std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw out_of_range("extremal_fast_check needs p, q >= 1");
  if (!precedes(a1, a2, p, q))
    throw precedence_violated("a1 p + a2 q >= a1 a2 + a1 + a2");
  for (std::int64_t pp = 1; pp <= p; ++pp)
    for (std::int64_t qq = 1; qq <= q; ++qq) {
      const bool first = (b * a2 - a1) * (pp - 1) - a2 * (qq - 1) > (b * p - a1) * a2;
      const bool second = (c * a1 - a2) * (qq - 1) - a1 * (pp - 1) > (c * q - a2) * a1;
      if (!first && !second) return false;
    }
  return true;
}

}  // namespace rank2
