#include "quadtuple/counterex.hpp"

#include <exception>
#include <stdexcept>

#include "quadtuple/errors.hpp"
#include "quadtuple/kernels.hpp"
#include "quadtuple/pellsolve.hpp"

namespace quadtuple {

namespace {

DCandidate family_member(const Integer& alpha) {
  DCandidate c;
  c.alpha = alpha;
  c.d = 360 * (10 * alpha * alpha + alpha) + 15;
  c.x = 60 * alpha + 3;
  if (c.x * c.x - c.d != -6) throw ShapeError("x^2 - d != -6 at alpha = " + to_string(alpha));
  return c;
}

}  // namespace

DCandidate family_d(const Integer& alpha) {
  DCandidate c = family_member(alpha);
  c.square_free = is_square_free(c.d);
  return c;
}

std::vector<DCandidate> enumerate_counterexample_rings(long alpha_lo, long alpha_hi,
                                                       bool parallel) {
  if (alpha_lo > alpha_hi) throw std::invalid_argument("empty alpha range");
  std::vector<DCandidate> out;
  std::vector<Integer> ds;
  for (long a = alpha_lo; a <= alpha_hi; ++a) {
    out.push_back(family_member(Integer(a)));
    ds.push_back(out.back().d);
  }
  const auto flags = parallel ? kernels::parallel::square_free_flags(ds)
                              : kernels::serial::square_free_flags(ds);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].square_free = flags[i] != 0;
  return out;
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

}  // namespace

CounterexampleReport build_report(const RingCtx& ctx, long t, const ReportOptions& opts) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (t > opts.t_cap)
    throw std::invalid_argument("t = " + std::to_string(t) + " exceeds the cap " +
                                std::to_string(opts.t_cap));

  stage("eligibility", [&] {
    if (!ctx.square_free()) throw HypothesisError("d is not square-free");
    if (ctx.d_mod60() != 15) throw HypothesisError("d ≢ 15 (mod 60)");
    if (!minus6_solvable(ctx)) throw HypothesisError("x^2 - dy^2 = -6 is unsolvable");
    return 0;
  });

  CounterexampleReport report;
  report.d = ctx.d();
  report.t = t;
  const QuadInt eps = ctx.fundamental_unit();
  const auto te = static_cast<unsigned long>(t);
  const QuadInt eps_t = ctx.pow(eps, te);
  report.n = Integer(2) * ctx.square(eps_t);

  const auto built = stage("construct", [&] { return construct_quadruple(ctx, 0, 0); });
  const ConstructionTrace& trace = built.second;
  report.quadruple = stage("scale", [&] { return scale_quadruple(ctx, built.first, eps_t); });
  report.certificate = stage("certify", [&] {
    auto cert = certify_nonrepresentable(ctx, report.n);
    if (!cert) throw ShapeError("n = " + format_quadint(report.n) + " could not be certified");
    return cert;
  });
  const bool quad_ok =
      stage("verify", [&] { return verify_quadruple(ctx, report.quadruple).all_pass(); });

  report.verified = quad_ok && report.certificate && report.certificate->n == report.n &&
                    report.quadruple.n == report.n &&
                    report.n == Integer(2) * ctx.pow(eps, 2 * te);
  report.notes = {
      "fundamental unit " + format_quadint(eps),
      "norm -6 element " + format_quadint(trace.gamma_delta) + ", unit a = " +
          format_quadint(trace.unit_a) + " (index " + std::to_string(trace.unit_index) + ")",
      "D(2) quadruple from m = k = 0, scaled by the fundamental unit to the power " +
          std::to_string(t),
  };
  return report;
}

std::vector<FamilyOutcome> build_family_reports(long alpha_lo, long alpha_hi, long t,
                                                const ReportOptions& opts) {
  const auto candidates = enumerate_counterexample_rings(alpha_lo, alpha_hi);
  std::vector<FamilyOutcome> outcomes(candidates.size());
  const long count = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    FamilyOutcome& out = outcomes[i];
    out.candidate = candidates[i];
    if (!out.candidate.square_free) continue;
    try {
      const RingCtx ctx(out.candidate.d);
      out.report = build_report(ctx, t, opts);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  }
  return outcomes;
}

}  // namespace quadtuple
