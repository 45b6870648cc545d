#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "rank2/roots.hpp"

using rank2::BigInt;
using rank2::RootVector;

namespace {

std::vector<std::int64_t> window(const rank2::Sequence& s, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(s(k).convert_to<std::int64_t>());
  return out;
}

}  // namespace

TEST_CASE("Cartan classification") {
  CHECK(rank2::CartanParams(1, 3).kind() == rank2::CartanKind::finite);
  CHECK(rank2::CartanParams(2, 2).kind() == rank2::CartanKind::affine);
  CHECK(rank2::CartanParams(4, 1).kind() == rank2::CartanKind::affine);
  CHECK(rank2::CartanParams(3, 2).wild());
  CHECK(rank2::CartanParams(5, 1).mirrored().b == 1);
  CHECK_THROWS_AS(rank2::CartanParams(0, 3), rank2::out_of_range);
}

TEST_CASE("quadratic form closed forms") {
  for (int b = 1; b <= 6; ++b)
    for (int c = 1; c <= 6; ++c) {
      CHECK(rank2::quadratic_form(b, c, {1, 1}) == b + c - b * c);
      CHECK(rank2::quadratic_form(b, c, {2, 1}) == 4 * c - 2 * b * c + b);
    }
  CHECK(rank2::quadratic_form(5, 1, {2, 1}) == -1);
}

TEST_CASE("imaginary roots") {
  CHECK(rank2::is_imaginary(3, 2, {1, 1}));
  CHECK(rank2::is_imaginary(3, 2, {4, 3}));
  CHECK_FALSE(rank2::is_imaginary(3, 2, {1, 0}));
  CHECK_FALSE(rank2::is_imaginary(3, 2, {3, 1}));
  CHECK_FALSE(rank2::is_imaginary(2, 2, {2, 1}));
}

TEST_CASE("reflections preserve Q and are involutions") {
  for (auto [b, c] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}, std::pair{1, 5}, std::pair{7, 4}})
    for (int n = 0; n < 1000; ++n) {
      const RootVector v{testgen::uniform(-10'000, 10'000), testgen::uniform(-10'000, 10'000)};
      for (int i : {1, 2}) {
        const RootVector w = rank2::reflect(b, c, i, v);
        CHECK(rank2::quadratic_form(b, c, w) == rank2::quadratic_form(b, c, v));
        CHECK(rank2::reflect(b, c, i, w) == v);
      }
    }
}

TEST_CASE("Weyl words") {
  const auto w0 = rank2::weyl_word(3, 2, 1, 0);
  CHECK(w0.matrix == rank2::Mat2::identity());
  for (int k = 0; k <= 12; ++k)
    for (int branch : {1, 2}) {
      const auto w = rank2::weyl_word(3, 2, branch, k);
      CHECK(w.matrix.det() == (k % 2 ? -1 : 1));
    }
  // s2 s1 applied to (1,1) in A(3,2): s1 gives (1,1), s2 gives (2,1)
  CHECK(rank2::weyl_word(3, 2, 1, 2).apply({1, 1}) == RootVector{2, 1});
  CHECK_THROWS_AS(rank2::weyl_word(3, 2, 3, 1), rank2::out_of_range);
}

TEST_CASE("sequence values") {
  const auto s32 = rank2::sequences(3, 2, -2, 4);
  CHECK(window(s32.alpha, -2, 4) == std::vector<std::int64_t>{2, 1, 1, 1, 2, 3, 7});
  CHECK(window(s32.beta, -2, 4) == std::vector<std::int64_t>{5, 3, 4, 5, 11, 17, 40});
  CHECK(window(s32.gamma, -2, 4) == std::vector<std::int64_t>{11, 5, 4, 3, 5, 7, 16});
  const auto s51 = rank2::sequences(5, 1, -2, 4);
  CHECK(s51.kind == rank2::SequenceCase::c_is_one);
  CHECK(window(s51.alpha, -2, 4) == std::vector<std::int64_t>{3, 1, 2, 1, 3, 2, 7});
  CHECK(window(s51.beta, -2, 4) == std::vector<std::int64_t>{8, 3, 7, 4, 13, 9, 32});
  CHECK(window(s51.gamma, -2, 4) == std::vector<std::int64_t>{13, 4, 7, 3, 8, 5, 17});
  CHECK_THROWS_AS(rank2::sequences(2, 3, 0, 2), rank2::out_of_range);
  CHECK_THROWS_AS(s32.alpha(100), rank2::out_of_range);
}

TEST_CASE("alpha pairs are the Weyl orbit of the starting pair") {
  // (alpha(k), alpha(k-1)) = w(1;k) (alpha(0), alpha(-1)), transposed for odd k
  for (auto [b, c] : {std::pair{3, 2}, std::pair{5, 1}, std::pair{4, 3}}) {
    const auto s = rank2::sequences(b, c, 0, 10);
    const RootVector start{s.alpha(0).convert_to<std::int64_t>(), s.alpha(-1).convert_to<std::int64_t>()};
    for (int k = 0; k <= 10; ++k) {
      const RootVector image = rank2::weyl_word(b, c, 1, k).apply(start);
      const RootVector pair{s.alpha(k).convert_to<std::int64_t>(), s.alpha(k - 1).convert_to<std::int64_t>()};
      CHECK((k % 2 ? image.swapped() : image) == pair);
    }
  }
}

TEST_CASE("delta") {
  CHECK(rank2::delta(3, 2) == 1);
  CHECK(rank2::delta(5, 1) == 1);
  CHECK(rank2::delta(4, 3) == 5);
  CHECK(rank2::delta(7, 1) == 3);
  CHECK_THROWS_AS(rank2::delta(2, 2), rank2::not_wild);
}

TEST_CASE("sequence identities hold on a wide window") {
  for (int b = 1; b <= 7; ++b)
    for (int c = 1; c <= 7; ++c) {
      if (b * c <= 4) continue;
      const auto rep = rank2::evaluate_identities(b, c, -6, 14);
      CHECK(rep.all_pass());
      CHECK(rep.mirrored == (b < c));
    }
  CHECK_NOTHROW(rank2::check_identities(3, 2, -3, 8));
  CHECK_THROWS_AS(rank2::evaluate_identities(2, 2, 0, 3), rank2::not_wild);
}

TEST_CASE("sequence values stay exact past 64 bits") {
  const auto s = rank2::sequences(7, 5, 0, 60);
  CHECK(s.alpha(60) > BigInt(1) << 64);
  CHECK(rank2::evaluate_identities(7, 5, 40, 60).all_pass());
}
