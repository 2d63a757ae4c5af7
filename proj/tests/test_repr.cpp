#include "doctest.h"

#include <random>
#include <string>

#include "quadtuple/errors.hpp"
#include "quadtuple/repr.hpp"

using namespace quadtuple;

namespace {

// Independent exhaustive check over the documented domain:
// p = (x1, y1) with 0 <= x1, y1 <= bound; q with |coordinates| <= bound.
bool brute_representable(long d, long na, long nb, long bound) {
  for (long x1 = 0; x1 <= bound; ++x1)
    for (long y1 = 0; y1 <= bound; ++y1)
      for (long x2 = -bound; x2 <= bound; ++x2)
        for (long y2 = -bound; y2 <= bound; ++y2) {
          const long a = x1 * x1 + d * y1 * y1 - x2 * x2 - d * y2 * y2;
          const long b = 2 * (x1 * y1 - x2 * y2);
          if (a == na && b == nb) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("classify_n examples") {
  CHECK(classify_n(QuadInt(3, 0)) == NClass::odd);
  CHECK(classify_n(QuadInt(-1, 4)) == NClass::odd);
  CHECK(classify_n(QuadInt(4, -8)) == NClass::four_four);
  CHECK(classify_n(QuadInt(0, 2)) == NClass::four_four_plus_two);
  CHECK(classify_n(QuadInt(2, 0)) == NClass::two_mod_four);
  CHECK(classify_n(QuadInt(62, 16)) == NClass::two_mod_four);
  CHECK(classify_n(QuadInt(1, 1)) == NClass::T);
  CHECK(classify_n(QuadInt(2, 2)) == NClass::T);
  CHECK(classify_n(QuadInt(4, 2)) == NClass::four_four_plus_two);
  CHECK(classify_n(QuadInt(0, 1)) == NClass::T);
  CHECK(std::string(to_string(NClass::two_mod_four)) == "two_mod_four");
}

TEST_CASE("property: residue classes partition Z[sqrt(d)]") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    const QuadInt n(dist(rng), dist(rng));
    const long a = mod_u(n.a, 4), b = mod_u(n.b, 4);
    const bool odd = a % 2 == 1 && b % 2 == 0;
    const bool ff = a == 0 && b == 0;
    const bool ffp2 = a == 0 && b == 2;
    const bool two = a == 2 && b == 0;
    const int memberships = odd + ff + ffp2 + two;
    CHECK(memberships <= 1);
    const NClass c = classify_n(n);
    CHECK((c == NClass::T) == (memberships == 0));
    if (odd) CHECK(c == NClass::odd);
    if (ff) CHECK(c == NClass::four_four);
    if (ffp2) CHECK(c == NClass::four_four_plus_two);
    if (two) CHECK(c == NClass::two_mod_four);
  }
}

TEST_CASE("no_quadruple_if_T") {
  const RingCtx ctx(15);
  CHECK(no_quadruple_if_T(ctx, QuadInt(1, 1)));
  CHECK_FALSE(no_quadruple_if_T(ctx, QuadInt(2, 0)));
  CHECK_THROWS_AS(no_quadruple_if_T(RingCtx(13), QuadInt(1, 1)), HypothesisError);
}

TEST_CASE("certify_nonrepresentable") {
  const RingCtx ctx(15);
  const auto c2 = certify_nonrepresentable(ctx, QuadInt(2, 0));
  REQUIRE(c2);
  CHECK(c2->u == QuadInt(1, 0));
  CHECK(c2->norm_u == 1);
  CHECK(c2->ring_checks.d_mod_60 == 15);
  CHECK(c2->ring_checks.minus6_solvable);
  CHECK(c2->ring_checks.pm2_unsolvable);

  const auto c62 = certify_nonrepresentable(ctx, QuadInt(62, 16));
  REQUIRE(c62);
  CHECK(c62->u == QuadInt(31, 8));

  CHECK_FALSE(certify_nonrepresentable(ctx, QuadInt(10, 0)));  // Nm(5) = 25
  CHECK_FALSE(certify_nonrepresentable(ctx, QuadInt(3, 0)));
  CHECK_FALSE(certify_nonrepresentable(RingCtx(195), QuadInt(2, 0)));  // -6 unsolvable
  CHECK_FALSE(certify_nonrepresentable(RingCtx(13), QuadInt(2, 0)));
}

TEST_CASE("search_repr examples") {
  const RingCtx ctx(15);
  const auto h3 = search_repr(ctx, QuadInt(3, 0), 5);
  REQUIRE(h3);
  CHECK(h3->p == QuadInt(2, 0));
  CHECK(h3->q == QuadInt(1, 0));

  const auto h19 = search_repr(ctx, QuadInt(19, 4), 20);
  REQUIRE(h19);
  CHECK(h19->p == QuadInt(2, 1));
  CHECK(h19->q == QuadInt(0, 0));

  const auto h64 = search_repr(ctx, QuadInt(6, 4), 50);
  REQUIRE(h64);
  CHECK(h64->p == QuadInt(5, 0));
  CHECK(h64->q == QuadInt(-2, 1));

  CHECK_FALSE(search_repr(ctx, QuadInt(2, 0), 60));
  CHECK_FALSE(search_repr(ctx, QuadInt(62, 16), 60));
  CHECK_THROWS_AS(search_repr(ctx, QuadInt(3, 0), 0), std::invalid_argument);

  SearchOptions serial;
  serial.parallel = false;
  const auto s64 = search_repr(ctx, QuadInt(6, 4), 50, serial);
  REQUIRE(s64);
  CHECK(s64->p == h64->p);
  CHECK(s64->q == h64->q);
}

TEST_CASE("liveness: odd rational n are differences of squares") {
  const RingCtx ctx(15);
  for (long n = 3; n <= 99; n += 2) {
    const auto hit = search_repr(ctx, QuadInt(n, 0), 50);
    CAPTURE(n);
    REQUIRE(hit);
    CHECK(ctx.square(hit->p) - ctx.square(hit->q) == QuadInt(n, 0));
  }
}

TEST_CASE("property: search agrees with an exhaustive oracle at small bounds") {
  std::mt19937_64 rng(31);
  const long bound = 6;
  const RingCtx ctx(15);
  for (int i = 0; i < 60; ++i) {
    const long na = static_cast<long>(rng() % 61) - 30;
    const long nb = static_cast<long>(rng() % 21) - 10;
    const QuadInt n(na, nb);
    const auto hit = search_repr(ctx, n, bound);
    CAPTURE(na);
    CAPTURE(nb);
    CHECK(hit.has_value() == brute_representable(15, na, nb, bound));
    if (hit) CHECK(ctx.square(hit->p) - ctx.square(hit->q) == n);
  }
}

TEST_CASE("property: closure under multiplication by eps^2") {
  const RingCtx ctx(15);
  const QuadInt e = ctx.fundamental_unit();
  const QuadInt e2 = ctx.square(e);
  for (long n = 3; n <= 21; n += 2) {
    const auto hit = search_repr(ctx, QuadInt(n, 0), 20);
    REQUIRE(hit);
    const QuadInt scaled = ctx.mul(e2, QuadInt(n, 0));
    CHECK(ctx.square(ctx.mul(e, hit->p)) - ctx.square(ctx.mul(e, hit->q)) == scaled);
  }
  QuadInt n(2, 0);
  for (int t = 0; t < 6; ++t) {
    CHECK(certify_nonrepresentable(ctx, n).has_value());
    n = ctx.mul(e2, n);
  }
}
