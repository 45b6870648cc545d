#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "rank2/dyck.hpp"

using rank2::DyckPath;
using rank2::EdgeMask;
using rank2::PathPoint;
using rank2::SubsetPair;

namespace {

// Every lattice path from (0,0) to (a1,a2) that stays weakly below the
// diagonal, as step words.
std::vector<std::string> paths_below_diagonal(int a1, int a2) {
  std::vector<std::string> out;
  std::string w;
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (std::int64_t{y} * a1 > std::int64_t{x} * a2) return;
    if (x == a1 && y == a2) {
      out.push_back(w);
      return;
    }
    if (x < a1) {
      w.push_back('H');
      self(self, x + 1, y);
      w.pop_back();
    }
    if (y < a2) {
      w.push_back('V');
      self(self, x, y + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Height reached after each horizontal step.
std::vector<int> heights(const std::string& w) {
  std::vector<int> h;
  int y = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] == 'V') ++y;
    if (w[t] == 'H') {
      int top = y;
      for (std::size_t s = t + 1; s < w.size() && w[s] == 'V'; ++s) ++top;
      h.push_back(top);
    }
  }
  return h;
}

rank2::CoeffGrid brute_force_grid(const DyckPath& path, int b, int c) {
  rank2::CoeffGrid grid(path.a1(), path.a2());
  for (EdgeMask s1 = 0; s1 < (EdgeMask{1} << path.a1()); ++s1)
    for (EdgeMask s2 = 0; s2 < (EdgeMask{1} << path.a2()); ++s2) {
      const SubsetPair pair{s1, s2};
      if (rank2::is_compatible(path, pair, b, c)) grid.at(pair.size2(), pair.size1()) += 1;
    }
  return grid;
}

const std::vector<std::pair<int, int>> algebras{{3, 2}, {2, 3}, {5, 1}, {1, 5}, {4, 4}, {1, 1}};

}  // namespace

TEST_CASE("maximal Dyck path examples") {
  CHECK(rank2::max_dyck_path(4, 3).word() == "HHVHVHV");
  CHECK(rank2::max_dyck_path(0, 3).word() == "VVV");
  CHECK(rank2::max_dyck_path(3, 0).word() == "HHH");
  CHECK(rank2::max_dyck_path(1, 1).word() == "HV");
  CHECK(rank2::max_dyck_path(2, 4).word() == "HVVHVV");
}

TEST_CASE("maximal Dyck path is the highest path below the diagonal") {
  for (int a1 = 1; a1 <= 7; ++a1)
    for (int a2 = 0; a2 <= 7; ++a2) {
      const auto candidates = paths_below_diagonal(a1, a2);
      const std::string best = rank2::max_dyck_path(a1, a2).word();
      REQUIRE(std::find(candidates.begin(), candidates.end(), best) != candidates.end());
      const auto hb = heights(best);
      for (const auto& w : candidates) {
        const auto hw = heights(w);
        for (std::size_t i = 0; i < hw.size(); ++i) CHECK(hw[i] <= hb[i]);
      }
    }
}

TEST_CASE("path points and positions") {
  const DyckPath p = rank2::max_dyck_path(4, 3);
  CHECK(p.point(0) == PathPoint{0, 0});
  CHECK(p.point(7) == PathPoint{4, 3});
  CHECK(p.position_of({4, 3}) == 0);
  CHECK(p.position_of({2, 1}) == 3);
  CHECK_FALSE(p.position_of({0, 1}));
  CHECK(p.height_of_horizontal(3) == 1);
  CHECK(p.horizontal_step(1) == 0);
  CHECK(p.vertical_step(1) == 2);
}

TEST_CASE("subpath edges") {
  const DyckPath p = rank2::max_dyck_path(4, 3);
  const auto mid = rank2::subpath_edges(p, {2, 1}, {3, 2});
  CHECK(mid.horizontal == 0b0100);
  CHECK(mid.vertical == 0b010);
  const auto wrap = rank2::subpath_edges(p, {3, 2}, {2, 1});
  CHECK(wrap.horizontal == 0b1011);
  CHECK(wrap.vertical == 0b101);
  CHECK(rank2::subpath_edges(p, {1, 0}, {1, 0}).size() == 7);
  CHECK_THROWS_AS(rank2::subpath_edges(p, {0, 2}, {1, 0}), rank2::point_not_on_path);
}

TEST_CASE("pruned enumeration agrees with the literal check on every pair") {
  for (auto [b, c] : algebras)
    for (int a1 = 0; a1 <= 6; ++a1)
      for (int a2 = 0; a2 <= 6; ++a2) {
        const DyckPath path = rank2::max_dyck_path(a1, a2);
        const auto fast = rank2::enumerate_compatible_pairs(path, b, c, 26, 1);
        const auto slow = brute_force_grid(path, b, c);
        for (int p = 0; p <= a2; ++p)
          for (int q = 0; q <= a1; ++q) CHECK(fast.at(p, q) == slow.at(p, q));
      }
}

TEST_CASE("fast scanner agrees with the literal check on random pairs") {
  for (auto [b, c] : algebras)
    for (int n = 0; n < 400; ++n) {
      const DyckPath path = rank2::max_dyck_path(static_cast<int>(testgen::uniform(1, 12)),
                                                 static_cast<int>(testgen::uniform(1, 12)));
      const SubsetPair pair = testgen::subset_pair(path);
      const rank2::detail::Scanner scanner(path, b, c);
      CHECK(scanner.compatible(pair) == rank2::is_compatible(path, pair, b, c));
    }
}

TEST_CASE("compatibility is inherited by subsets") {
  for (auto [b, c] : algebras)
    for (int n = 0; n < 300; ++n) {
      const DyckPath path = rank2::max_dyck_path(static_cast<int>(testgen::uniform(1, 10)),
                                                 static_cast<int>(testgen::uniform(1, 10)));
      const SubsetPair pair = testgen::subset_pair(path);
      if (!rank2::is_compatible(path, pair, b, c)) continue;
      for (int i = 0; i < 64; ++i) {
        if (pair.s1 >> i & 1) CHECK(rank2::is_compatible(path, {pair.s1 & ~(EdgeMask{1} << i), pair.s2}, b, c));
        if (pair.s2 >> i & 1) CHECK(rank2::is_compatible(path, {pair.s1, pair.s2 & ~(EdgeMask{1} << i)}, b, c));
      }
    }
}

TEST_CASE("known coefficient grids") {
  const auto g11 = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(1, 1), 3, 2);
  CHECK(g11.at(0, 0) == 1);
  CHECK(g11.at(0, 1) == 1);
  CHECK(g11.at(1, 0) == 1);
  CHECK(g11.at(1, 1) == 0);

  const auto g43 = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(4, 3), 3, 2);
  const int expected[4][5] = {{1, 4, 6, 4, 1}, {3, 4, 1, 0, 0}, {3, 0, 0, 0, 0}, {1, 0, 0, 0, 0}};
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 4; ++q) CHECK(g43.at(p, q) == expected[p][q]);
  CHECK(g43.total() == 28);
}

TEST_CASE("paths without one kind of step give binomial rows") {
  for (int n = 0; n <= 10; ++n) {
    const auto row = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(n, 0), 3, 2);
    const auto col = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(0, n), 3, 2);
    rank2::BigInt binom = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(row.at(0, k) == binom);
      CHECK(col.at(k, 0) == binom);
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("transposing the path and swapping b, c transposes the grid") {
  for (auto [b, c] : algebras)
    for (int a1 = 0; a1 <= 7; ++a1)
      for (int a2 = 0; a2 <= 7; ++a2) {
        const auto g = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(a1, a2), b, c);
        const auto t = rank2::enumerate_compatible_pairs(rank2::max_dyck_path(a2, a1), c, b);
        for (int p = 0; p <= a2; ++p)
          for (int q = 0; q <= a1; ++q) CHECK(g.at(p, q) == t.at(q, p));
      }
}

TEST_CASE("thread count does not change the grid") {
  const DyckPath path = rank2::max_dyck_path(9, 13);
  const auto one = rank2::enumerate_compatible_pairs(path, 1, 5, 26, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto many = rank2::enumerate_compatible_pairs(path, 1, 5, 26, t);
    for (int p = 0; p <= 13; ++p)
      for (int q = 0; q <= 9; ++q) CHECK(one.at(p, q) == many.at(p, q));
  }
  CHECK(one.total() == 107281);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(rank2::enumerate_compatible_pairs(rank2::max_dyck_path(14, 13), 3, 2), rank2::too_large);
  try {
    rank2::enumerate_compatible_pairs(rank2::max_dyck_path(10, 10), 3, 2, 12);
    FAIL("expected too_large");
  } catch (const rank2::too_large& e) {
    CHECK(e.edges() == 20);
    CHECK(e.cap() == 12);
  }
}

TEST_CASE("list and visitor agree with the counting table") {
  const DyckPath path = rank2::max_dyck_path(5, 4);
  const auto pairs = rank2::list_compatible_pairs(path, 2, 3);
  CHECK(rank2::BigInt(pairs.size()) == rank2::enumerate_compatible_pairs(path, 2, 3).total());
  for (const auto& pr : pairs) CHECK(rank2::is_compatible(path, pr, 2, 3));
}

TEST_CASE("extremal pairs") {
  const DyckPath path = rank2::max_dyck_path(4, 3);
  const SubsetPair e = rank2::extremal_pair(path, 2, 1);
  CHECK(e.s1 == 0b0011);
  CHECK(e.s2 == 0b100);
  CHECK_THROWS_AS(rank2::extremal_pair(path, 5, 0), rank2::out_of_range);
}

TEST_CASE("precedes matches the positions of the extremal edges") {
  for (int a1 = 1; a1 <= 12; ++a1)
    for (int a2 = 1; a2 <= 12; ++a2) {
      const DyckPath path = rank2::max_dyck_path(a1, a2);
      for (int p = 1; p <= a2; ++p)
        for (int q = 1; q <= a1; ++q) {
          const bool geometric = path.horizontal_step(q) < path.vertical_step(a2 - p + 1);
          CHECK(rank2::precedes(a1, a2, p, q) == geometric);
        }
    }
}

TEST_CASE("extremal fast check is sufficient") {
  int certified = 0;
  for (auto [b, c] : algebras)
    for (int a1 = 1; a1 <= 10; ++a1)
      for (int a2 = 1; a2 <= 10; ++a2) {
        const DyckPath path = rank2::max_dyck_path(a1, a2);
        for (int p = 1; p <= a2; ++p)
          for (int q = 1; q <= a1; ++q) {
            if (!rank2::precedes(a1, a2, p, q)) {
              CHECK_THROWS_AS(rank2::extremal_fast_check(b, c, a1, a2, p, q), rank2::precedence_violated);
              continue;
            }
            if (!rank2::extremal_fast_check(b, c, a1, a2, p, q)) continue;
            ++certified;
            CHECK(rank2::is_compatible(path, rank2::extremal_pair(path, q, p), b, c));
          }
      }
  CHECK(certified > 0);
  CHECK_THROWS_AS(rank2::extremal_fast_check(3, 2, 4, 3, 0, 1), rank2::out_of_range);
}
