#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "rank2/cluster.hpp"

using rank2::LaurentPoly2;

namespace {

const std::vector<std::pair<int, int>> algebras{{3, 2}, {2, 3}, {5, 1}, {1, 5}, {2, 2}, {1, 1}};

}  // namespace

TEST_CASE("first cluster variables") {
  rank2::ClusterVarTable t(3, 2);
  const LaurentPoly2 one = LaurentPoly2::constant(1);
  CHECK(t.get(3) == (LaurentPoly2::x2(2) + one) * LaurentPoly2::x1(-1));
  CHECK(t.get(0) == (LaurentPoly2::x1(3) + one) * LaurentPoly2::x2(-1));
  CHECK(t.lowest() == 0);
  CHECK(t.highest() == 3);
}

TEST_CASE("exchange relations hold in both directions") {
  for (auto [b, c] : algebras) {
    rank2::ClusterVarTable t(b, c);
    for (std::int64_t m = -5; m <= 7; ++m) {
      const auto e = static_cast<unsigned>(rank2::exchange_exponent(b, c, m));
      CHECK(t.get(m - 1) * t.get(m + 1) == t.get(m).pow(e) + LaurentPoly2::constant(1));
    }
  }
}

TEST_CASE("cluster variables have positive coefficients") {
  for (auto [b, c] : algebras) {
    rank2::ClusterVarTable t(b, c);
    for (std::int64_t m = -5; m <= 7; ++m) CHECK(rank2::lp_min_coefficient(t.get(m)) >= 1);
  }
}

TEST_CASE("finite type is periodic") {
  // A(1,1) has period 5
  rank2::ClusterVarTable t(1, 1);
  for (std::int64_t m = -3; m <= 4; ++m) CHECK(t.get(m) == t.get(m + 5));
}

TEST_CASE("cluster variables outside the initial cluster are greedy elements") {
  int compared = 0;
  for (auto [b, c] : algebras) {
    rank2::ClusterVarTable t(b, c);
    for (std::int64_t m = -4; m <= 7; ++m) {
      if (m == 1 || m == 2) continue;
      const auto at = rank2::lp_pointed_at(t.get(m), b, c);
      REQUIRE(at);
      if (at->e1 < 0 || at->e2 < 0 || at->e1 + at->e2 > 20) continue;
      ++compared;
      CHECK(rank2::greedy_element(b, c, static_cast<int>(at->e1), static_cast<int>(at->e2)).laurent == t.get(m));
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("sigma maps cluster variables by reflection of the index") {
  for (auto [b, c] : algebras) {
    rank2::ClusterVarTable t(b, c);
    for (std::int64_t m = -3; m <= 6; ++m) {
      CHECK(rank2::sigma_apply(b, c, 1, t.get(m)) == t.get(2 - m));
      CHECK(rank2::sigma_apply(b, c, 2, t.get(m)) == t.get(4 - m));
    }
  }
}

TEST_CASE("sigma is an involution on greedy elements") {
  for (auto [b, c] : {std::pair{3, 2}, std::pair{5, 1}})
    for (int a1 = 0; a1 <= 5; ++a1)
      for (int a2 = 0; a2 <= 5; ++a2) {
        const LaurentPoly2 f = rank2::greedy_element(b, c, a1, a2).laurent;
        for (int ell : {1, 2}) CHECK(rank2::sigma_apply(b, c, ell, rank2::sigma_apply(b, c, ell, f)) == f);
      }
}

TEST_CASE("sigma on greedy elements matches the index rule") {
  int tested = 0;
  for (auto [b, c] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}})
    for (int a1 = 0; a1 <= 6; ++a1)
      for (int a2 = 0; a2 <= 6; ++a2)
        for (int ell : {1, 2}) {
          const auto image = rank2::sigma_image(b, c, ell, {a1, a2});
          if (image.a1 < 0 || image.a2 < 0 || image.a1 + image.a2 > 22) continue;
          ++tested;
          CHECK(rank2::verify_sigma_on_greedy(b, c, {a1, a2}, ell));
        }
  CHECK(tested > 100);
}

TEST_CASE("sigma image of x[1,1]") {
  CHECK(rank2::sigma_image(3, 2, 1, {1, 1}) == rank2::RootVector{1, 1});
  CHECK(rank2::sigma_image(3, 2, 2, {1, 1}) == rank2::RootVector{2, 1});
  CHECK(rank2::sigma_image(3, 2, 1, {-2, 1}) == rank2::RootVector{-2, -1});
}

TEST_CASE("sigma rejects elements outside the algebra") {
  CHECK_THROWS_AS(rank2::sigma_apply(3, 2, 1, LaurentPoly2::x2(-1)), rank2::not_laurent);
  CHECK_THROWS_AS(rank2::sigma_apply(3, 2, 3, LaurentPoly2::x2(1)), rank2::out_of_range);
  CHECK(rank2::sigma_apply(3, 2, 1, LaurentPoly2()).is_zero());
}

TEST_CASE("sigma is a ring map on random Laurent polynomials in x1") {
  for (int n = 0; n < 50; ++n) {
    // polynomials in x1^{+-1} and x2 are always mapped into Laurent polynomials by sigma_1
    LaurentPoly2 f, g;
    for (int i = 0; i < 4; ++i) {
      f.add_term({testgen::uniform(-3, 3), testgen::uniform(0, 3)}, testgen::uniform(-5, 5));
      g.add_term({testgen::uniform(-3, 3), testgen::uniform(0, 3)}, testgen::uniform(-5, 5));
    }
    CHECK(rank2::sigma_apply(3, 2, 1, f * g) == rank2::sigma_apply(3, 2, 1, f) * rank2::sigma_apply(3, 2, 1, g));
    CHECK(rank2::sigma_apply(3, 2, 1, f + g) == rank2::sigma_apply(3, 2, 1, f) + rank2::sigma_apply(3, 2, 1, g));
  }
}
