#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadtuple/construct.hpp"
#include "quadtuple/integer.hpp"
#include "quadtuple/quadring.hpp"
#include "quadtuple/repr.hpp"

namespace quadtuple {

/// d = 360(10 alpha^2 + alpha) + 15 with x = 60 alpha + 3, so x^2 - d = -6.
struct DCandidate {
  Integer alpha;
  Integer d;
  Integer x;
  bool square_free = false;
};

DCandidate family_d(const Integer& alpha);

// Candidates for alpha_lo..alpha_hi in alpha order; non-square-free members are
// kept with square_free = false. Throws std::invalid_argument if lo > hi.
std::vector<DCandidate> enumerate_counterexample_rings(long alpha_lo, long alpha_hi,
                                                       bool parallel = true);

struct CounterexampleReport {
  Integer d;
  long t = 0;
  QuadInt n;  // 2 * eps^(2t)
  Quadruple quadruple;
  std::optional<NonRepCertificate> certificate;
  bool verified = false;
  std::vector<std::string> notes;
};

struct ReportOptions {
  long t_cap = 1000;
};

// D(2) quadruple from the m = k = 0 construction, scaled by eps^t, paired with
// the non-representability certificate of n = 2 eps^(2t).
// Throws std::invalid_argument for t outside [0, t_cap] and PipelineError
// (stage-labelled) for anything else.
CounterexampleReport build_report(const RingCtx& ctx, long t, const ReportOptions& opts = {});

struct FamilyOutcome {
  DCandidate candidate;
  std::optional<CounterexampleReport> report;  // set for eligible candidates that built
  std::string error;                           // set when an eligible candidate failed
};

// build_report over the family, candidates processed concurrently, results in
// alpha order.
std::vector<FamilyOutcome> build_family_reports(long alpha_lo, long alpha_hi, long t,
                                                const ReportOptions& opts = {});

}  // namespace quadtuple
