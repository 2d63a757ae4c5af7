#include "doctest.h"

#include <map>
#include <random>
#include <utility>

#include "quadtuple/errors.hpp"
#include "quadtuple/quadring.hpp"

using namespace quadtuple;

namespace {

QuadInt random_element(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  return {dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("RingCtx validation and caches") {
  const RingCtx r15(15);
  CHECK(r15.d() == 15);
  CHECK(r15.d_mod4() == 3);
  CHECK(r15.d_mod60() == 15);
  CHECK(r15.d_mod360() == 15);
  CHECK(r15.square_free());
  CHECK(r15.fundamental_unit() == QuadInt(4, 1));

  CHECK_THROWS_AS(RingCtx(16), RingError);
  CHECK_THROWS_AS(RingCtx(1), RingError);
  CHECK_THROWS_AS(RingCtx(-15), RingError);
  CHECK_THROWS_AS(RingCtx(45), NonSquareFreeError);
  const RingCtx r735(735, /*allow_nonsquarefree=*/true);
  CHECK_FALSE(r735.square_free());
  CHECK(r735.d_mod360() == 15);
}

TEST_CASE("additive operations") {
  CHECK(QuadInt(4, 1) + QuadInt(3, 1) == QuadInt(7, 2));
  CHECK(QuadInt(4, 1) + QuadInt(0, 0) == QuadInt(4, 1));
  CHECK(QuadInt(3, 1) - QuadInt(3, 1) == QuadInt(0, 0));
  CHECK(-QuadInt(3, -1) == QuadInt(-3, 1));
}

TEST_CASE("multiplication, conjugate, norm") {
  const RingCtx ctx(15);
  CHECK(ctx.mul(QuadInt(3, -1), QuadInt(3, 1)) == QuadInt(-6, 0));
  CHECK(ctx.mul(QuadInt(4, 1), QuadInt(4, -1)) == QuadInt(1, 0));
  CHECK(ctx.mul(QuadInt(7, -5), QuadInt(1, 0)) == QuadInt(7, -5));
  CHECK(conjugate(QuadInt(3, 1)) == QuadInt(3, -1));
  CHECK(conjugate(QuadInt(5, 0)) == QuadInt(5, 0));
  CHECK(ctx.norm(QuadInt(4, 1)) == 1);
  CHECK(ctx.norm(QuadInt(3, 1)) == -6);
  CHECK(ctx.norm(QuadInt(0, 0)) == 0);
}

TEST_CASE("pow") {
  const RingCtx ctx(15);
  CHECK(ctx.pow(QuadInt(4, 1), 2) == QuadInt(31, 8));
  CHECK(ctx.pow(QuadInt(9, -2), 0) == QuadInt(1, 0));
  CHECK(ctx.pow(QuadInt(9, -2), 1) == QuadInt(9, -2));
}

TEST_CASE("exact_div") {
  const RingCtx ctx(15);
  CHECK(ctx.exact_div(QuadInt(2, 0), QuadInt(4, 1)) == QuadInt(8, -2));
  CHECK(ctx.exact_div(QuadInt(5, 3), QuadInt(1, 0)) == QuadInt(5, 3));
  CHECK_FALSE(ctx.exact_div(QuadInt(1, 0), QuadInt(2, 0)));
  CHECK_THROWS_AS(ctx.exact_div(QuadInt(1, 0), QuadInt(0, 0)), std::domain_error);
}

TEST_CASE("units") {
  const RingCtx ctx(15);
  CHECK(ctx.is_unit(QuadInt(4, 1)));
  CHECK(ctx.unit_inverse(QuadInt(4, 1)) == QuadInt(4, -1));
  CHECK(ctx.is_unit(QuadInt(1, 0)));
  CHECK(ctx.unit_inverse(QuadInt(1, 0)) == QuadInt(1, 0));
  CHECK_FALSE(ctx.is_unit(QuadInt(3, 1)));
  CHECK_THROWS_AS(ctx.unit_inverse(QuadInt(3, 1)), std::domain_error);
}

TEST_CASE("sqrt_in_ring examples") {
  const RingCtx ctx(15);
  CHECK(ctx.sqrt_in_ring(QuadInt(19, 4)) == QuadInt(2, 1));
  CHECK_FALSE(ctx.sqrt_in_ring(QuadInt(64, 16)));
  CHECK(ctx.sqrt_in_ring(QuadInt(4, 0)) == QuadInt(2, 0));
  CHECK(ctx.sqrt_in_ring(QuadInt(15, 0)) == QuadInt(0, 1));
  CHECK(ctx.sqrt_in_ring(QuadInt(60, 0)) == QuadInt(0, 2));
  CHECK(ctx.sqrt_in_ring(QuadInt(0, 0)) == QuadInt(0, 0));
  CHECK(ctx.sqrt_in_ring(QuadInt(19, -4)) == QuadInt(2, -1));
  CHECK_FALSE(ctx.sqrt_in_ring(QuadInt(-4, 0)));

  CHECK(ctx.sqrt_in_ring_by_divisors(QuadInt(19, 4)) == QuadInt(2, 1));
  CHECK_FALSE(ctx.sqrt_in_ring_by_divisors(QuadInt(64, 16)));
  CHECK(ctx.sqrt_in_ring_by_divisors(QuadInt(15, 0)) == QuadInt(0, 1));
}

TEST_CASE("sqrt_in_ring on large coordinates") {
  const RingCtx ctx(15);
  const QuadInt w = ctx.mul(ctx.pow(QuadInt(4, 1), 80), QuadInt(7, -3));
  const QuadInt z = ctx.square(w);
  const auto root = ctx.sqrt_in_ring(z);
  REQUIRE(root);
  CHECK(ctx.square(*root) == z);
  CHECK((*root == w || *root == -w));
  CHECK_FALSE(ctx.sqrt_in_ring(z + QuadInt(0, 2)));
}

TEST_CASE("property: sqrt_in_ring agrees with exhaustive search for |a|,|b| <= 200") {
  for (long d : {15L, 735L}) {
    const RingCtx ctx(d, true);
    std::map<std::pair<long, long>, QuadInt> squares;
    for (long x = -200; x <= 200; ++x) {
      for (long y = -200; y <= 200; ++y) {
        const QuadInt w(x, y);
        const QuadInt z = ctx.square(w);
        if (abs(z.a) <= 200 && abs(z.b) <= 200) squares.emplace(std::pair{z.a.get_si(), z.b.get_si()}, w);
      }
    }
    long mismatches = 0;
    long divisor_mismatches = 0;
    for (long a = -200; a <= 200; ++a) {
      for (long b = -200; b <= 200; ++b) {
        const QuadInt z(a, b);
        const auto root = ctx.sqrt_in_ring(z);
        const bool expected = squares.count({a, b}) != 0;
        if (root.has_value() != expected || (root && !(ctx.square(*root) == z))) ++mismatches;
        if (b % 2 == 0 && a % 3 == 0) {
          const auto alt = ctx.sqrt_in_ring_by_divisors(z);
          if (alt.has_value() != expected || (alt && root && !(*alt == *root))) ++divisor_mismatches;
        }
      }
    }
    CAPTURE(d);
    CHECK(mismatches == 0);
    CHECK(divisor_mismatches == 0);
  }
}

TEST_CASE("property: ring laws on random elements") {
  std::mt19937_64 rng(2024);
  for (long d : {15L, 735L, 3975L}) {
    const RingCtx ctx(d, true);
    for (int i = 0; i < 300; ++i) {
      const QuadInt x = random_element(rng, 1'000'000);
      const QuadInt y = random_element(rng, 1'000'000);
      CHECK(ctx.norm(ctx.mul(x, y)) == ctx.norm(x) * ctx.norm(y));
      CHECK(conjugate(ctx.mul(x, y)) == ctx.mul(conjugate(x), conjugate(y)));
      CHECK(conjugate(conjugate(x)) == x);
      if (!y.is_zero()) {
        const QuadInt prod = ctx.mul(x, y);
        CHECK(ctx.exact_div(prod, y) == x);
        if (auto q = ctx.exact_div(x, y)) CHECK(ctx.mul(*q, y) == x);
      }
      const auto root = ctx.sqrt_in_ring(ctx.square(x));
      REQUIRE(root);
      CHECK(ctx.square(*root) == ctx.square(x));
    }
  }
}

TEST_CASE("property: pow(x, 2t) == pow(pow(x, t), 2)") {
  std::mt19937_64 rng(99);
  const RingCtx ctx(15);
  for (int i = 0; i < 100; ++i) {
    const QuadInt x = random_element(rng, 50);
    const unsigned long t = rng() % 65;
    CHECK(ctx.pow(x, 2 * t) == ctx.square(ctx.pow(x, t)));
  }
}

TEST_CASE("property: no norm -1 among fundamental-unit powers for d ≡ 15 (mod 60)") {
  for (long d = 15; d <= 2000; d += 60) {
    const RingCtx ctx(d, true);
    QuadInt e = ctx.fundamental_unit();
    for (unsigned long k = 1; k <= 6; ++k) {
      CAPTURE(d);
      CHECK(ctx.norm(ctx.pow(e, k)) == 1);
    }
  }
}

TEST_CASE("textual element format") {
  CHECK(parse_quadint("8,-2") == QuadInt(8, -2));
  CHECK(parse_quadint("-3,0") == QuadInt(-3, 0));
  CHECK(format_quadint(QuadInt(28, -7)) == "28,-7");
  CHECK_THROWS_AS(parse_quadint("x,y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadint("1, 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadint("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_quadint("12"), std::invalid_argument);
}
