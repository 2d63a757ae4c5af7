#include "doctest.h"

#include <algorithm>
#include <string>

#include "quadtuple/counterex.hpp"
#include "quadtuple/errors.hpp"
#include "quadtuple/json_io.hpp"

using namespace quadtuple;

namespace {

std::size_t max_digits(const Quadruple& q) {
  std::size_t m = 0;
  for (const QuadInt& e : q.elements) {
    m = std::max({m, to_string(abs(e.a)).size(), to_string(abs(e.b)).size()});
  }
  return m;
}

}  // namespace

TEST_CASE("family_d") {
  const DCandidate c0 = family_d(0);
  CHECK(c0.d == 15);
  CHECK(c0.x == 3);
  CHECK(c0.square_free);
  const DCandidate c1 = family_d(1);
  CHECK(c1.d == 3975);
  CHECK(c1.x == 63);
  CHECK_FALSE(c1.square_free);
  const DCandidate cm1 = family_d(-1);
  CHECK(cm1.d == 3255);
  CHECK(cm1.x == -57);
}

TEST_CASE("enumerate_counterexample_rings") {
  const auto range = enumerate_counterexample_rings(0, 3);
  REQUIRE(range.size() == 4);
  CHECK(range[0].d == 15);
  CHECK(range[1].d == 3975);
  CHECK(range[2].d == 15135);
  CHECK(range[3].d == 33495);
  const auto serial = enumerate_counterexample_rings(0, 3, false);
  for (std::size_t i = 0; i < range.size(); ++i) {
    CHECK(serial[i].d == range[i].d);
    CHECK(serial[i].square_free == range[i].square_free);
  }
  CHECK_THROWS_AS(enumerate_counterexample_rings(3, 0), std::invalid_argument);
}

TEST_CASE("property: family identity for alpha in [-50, 50]") {
  const auto family = enumerate_counterexample_rings(-50, 50);
  REQUIRE(family.size() == 101);
  for (const DCandidate& c : family) {
    CAPTURE(c.alpha);
    CHECK(c.x * c.x - c.d == -6);
    CHECK(mod_u(c.d, 360) == 15);
    CHECK(c.square_free == is_square_free(c.d));
  }
}

TEST_CASE("build_report for d = 15") {
  const RingCtx ctx(15);
  const CounterexampleReport r0 = build_report(ctx, 0);
  CHECK(r0.n == QuadInt(2, 0));
  CHECK(r0.verified);
  REQUIRE(r0.certificate);
  CHECK(r0.certificate->u == QuadInt(1, 0));
  CHECK(r0.quadruple.elements[0] == QuadInt(4, 1));

  const CounterexampleReport r1 = build_report(ctx, 1);
  CHECK(r1.n == QuadInt(62, 16));
  CHECK(r1.verified);

  CHECK_THROWS_AS(build_report(ctx, -1), std::invalid_argument);
  ReportOptions small;
  small.t_cap = 3;
  CHECK_THROWS_AS(build_report(ctx, 4, small), std::invalid_argument);
  CHECK_THROWS_AS(build_report(RingCtx(13), 0), PipelineError);
}

TEST_CASE("eligible family members up to 1e5") {
  int eligible = 0;
  for (const DCandidate& c : enumerate_counterexample_rings(-10, 10)) {
    if (c.d > 100'000 || !c.square_free) continue;
    ++eligible;
    const RingCtx ctx(c.d);
    for (long t : {0L, 1L, 2L}) {
      const CounterexampleReport r = build_report(ctx, t);
      CAPTURE(c.d);
      CAPTURE(t);
      CHECK(r.verified);
      CHECK(r.certificate.has_value());
      CHECK(json::reverify_report(json::report(r)));
    }
  }
  CHECK(eligible == 9);
}

TEST_CASE("build_family_reports") {
  const auto outcomes = build_family_reports(0, 5, 1);
  REQUIRE(outcomes.size() == 6);
  for (const FamilyOutcome& o : outcomes) {
    CAPTURE(o.candidate.alpha);
    CHECK(o.error.empty());
    CHECK(o.report.has_value() == o.candidate.square_free);
    if (o.report) CHECK(o.report->verified);
  }
  CHECK_FALSE(outcomes[1].report.has_value());  // 3975 = 3 * 5^2 * 53
}

TEST_CASE("reports survive a JSON round trip; tampering is caught") {
  const RingCtx ctx(15);
  const json::Json j = json::report(build_report(ctx, 2));
  CHECK(json::reverify_report(j));
  CHECK(json::reverify_report(json::Json::parse(j.dump())));

  json::Json bad_element = j;
  bad_element["quadruple"]["elements"][1]["a"] = "9";
  CHECK_FALSE(json::reverify_report(bad_element));

  json::Json bad_cert = j;
  bad_cert["certificate"]["u"]["a"] = "2";
  CHECK_FALSE(json::reverify_report(bad_cert));

  json::Json bad_d = j;
  bad_d["d"] = "16";
  CHECK_FALSE(json::reverify_report(bad_d));

  json::Json no_cert = j;
  no_cert["certificate"] = nullptr;
  CHECK_FALSE(json::reverify_report(no_cert));
}

TEST_CASE("element size grows linearly in t") {
  const RingCtx ctx(15);
  const double d20 = static_cast<double>(max_digits(build_report(ctx, 20).quadruple));
  const double d40 = static_cast<double>(max_digits(build_report(ctx, 40).quadruple));
  CHECK(d40 / d20 >= 1.8);
  CHECK(d40 / d20 <= 2.2);
}
