#include "quadtuple/construct.hpp"

#include <stdexcept>

#include "quadtuple/errors.hpp"
#include "quadtuple/pellsolve.hpp"

namespace quadtuple {

namespace {

QuadInt halve(const QuadInt& x, const char* what) {
  if (mod_u(x.a, 2) != 0 || mod_u(x.b, 2) != 0)
    throw ShapeError(std::string(what) + " is not divisible by 2: " + format_quadint(x));
  return {x.a / 2, x.b / 2};
}

QuadInt pick_norm6(const RingCtx& ctx, Factorization choice) {
  const NormEqClasses classes = solve_norm_eq(ctx, -6);
  if (!classes.solvable())
    throw HypothesisError("x^2 - dy^2 = -6 has no solution for d = " + to_string(ctx.d()));
  const unsigned want = choice == Factorization::first ? 1 : 5;
  for (std::size_t limit = 8; limit <= (1U << 16); limit *= 2) {
    for (const QuadInt& s : enumerate_solutions(ctx, classes, limit)) {
      if (mod_u(s.b, 6) == want) return s;
    }
  }
  throw ShapeError("no norm -6 solution with the requested residue of y");
}

}  // namespace

const char* to_string(Factorization f) { return f == Factorization::first ? "first" : "second"; }

TargetN make_target(const Integer& m, const Integer& k) {
  return {m, k, QuadInt(4 * m + 2, 4 * k)};
}

std::string pair_label(std::size_t slot) {
  const auto [i, j] = kPairs.at(slot);
  return std::to_string(i + 1) + std::to_string(j + 1);
}

long zigzag(int index) {
  if (index < 0) throw std::invalid_argument("unit index must be nonnegative");
  return (index % 2 == 1) ? (index + 1) / 2 : -(index / 2);
}

QuadInt unit_candidate(const RingCtx& ctx, const QuadInt& gamma_delta, int index) {
  const QuadInt base = unit_from_norm6(ctx, gamma_delta);
  const long j = zigzag(index);
  const QuadInt eps2 = ctx.square(ctx.fundamental_unit());
  const QuadInt step = j >= 0 ? eps2 : conjugate(eps2);
  return ctx.mul(base, ctx.pow(step, static_cast<unsigned long>(j >= 0 ? j : -j)));
}

bool all_nonzero_distinct(const std::array<QuadInt, 4>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j]) return false;
    }
  }
  return true;
}

std::pair<Quadruple, ConstructionTrace> construct_quadruple(const RingCtx& ctx, const Integer& m,
                                                            const Integer& k, int unit_index,
                                                            Factorization choice,
                                                            const ConstructOptions& opts) {
  if (ctx.d_mod60() != 15)
    throw HypothesisError("construction requires d ≡ 15 (mod 60), d = " + to_string(ctx.d()));
  if (mod_u(m + k, 2) != 0)
    throw HypothesisError("construction requires m + k even, got m = " + to_string(m) +
                          ", k = " + to_string(k));
  if (unit_index < 0) throw std::invalid_argument("unit index must be nonnegative");

  ConstructionTrace trace;
  trace.factorization = choice;
  trace.gamma_delta = pick_norm6(ctx, choice);
  const QuadInt n = make_target(m, k).n;
  const QuadInt& gd = trace.gamma_delta;

  // 3n = (-1)(-6)(2m+1, 2k) = (-g, h) * (g, h)(2m+1, 2k)
  trace.alpha1 = QuadInt(-gd.a, gd.b);
  trace.alpha2 = ctx.mul(gd, QuadInt(2 * m + 1, 2 * k));
  const QuadInt s = halve(trace.alpha1 + trace.alpha2, "alpha1 + alpha2");  // a + 2r
  trace.alpha_sym = halve(trace.alpha1 - trace.alpha2, "alpha1 - alpha2");

  for (int attempt = 0; attempt < opts.retry_budget; ++attempt) {
    const int index = unit_index + attempt;
    const QuadInt a = unit_candidate(ctx, gd, index);
    const QuadInt r = halve(s - a, "a + 2r - a");
    const auto b = ctx.exact_div(ctx.square(r) - n, a);
    if (!b) throw ShapeError("unit " + format_quadint(a) + " does not divide r^2 - n");

    Quadruple q;
    q.n = n;
    q.elements = {a, *b, a + *b + Integer(2) * r, a + Integer(4) * *b + Integer(4) * r};
    if (!all_nonzero_distinct(q.elements)) continue;

    q.witnesses = {r,
                   a + r,
                   trace.alpha_sym,
                   *b + r,
                   Integer(2) * *b + r,
                   a + Integer(2) * *b + Integer(3) * r};
    trace.unit_a = a;
    trace.r = r;
    trace.b = *b;
    trace.unit_index = index;
    return {std::move(q), std::move(trace)};
  }
  throw BudgetError("no nondegenerate quadruple within " + std::to_string(opts.retry_budget) +
                    " unit indices starting at " + std::to_string(unit_index));
}

bool VerificationReport::all_pass() const {
  if (!nondegenerate) return false;
  for (const PairCheck& p : pairs) {
    if (!p.pass) return false;
  }
  return true;
}

VerificationReport verify_quadruple(const RingCtx& ctx, const Quadruple& q) {
  VerificationReport report;
  report.nondegenerate = all_nonzero_distinct(q.elements);
  for (std::size_t slot = 0; slot < kPairs.size(); ++slot) {
    const auto [i, j] = kPairs[slot];
    PairCheck& check = report.pairs[slot];
    check.i = i;
    check.j = j;
    check.value = ctx.mul(q.elements[i], q.elements[j]) + q.n;
    if (q.witnesses[slot]) check.witness_ok = ctx.square(*q.witnesses[slot]) == check.value;
    check.root = ctx.sqrt_in_ring(check.value);
    check.pass = check.root.has_value() && check.witness_ok.value_or(true);
  }
  return report;
}

Quadruple scale_quadruple(const RingCtx& ctx, const Quadruple& q, const QuadInt& w) {
  if (w.is_zero()) throw std::domain_error("scaling by the zero element");
  Quadruple out;
  for (std::size_t i = 0; i < 4; ++i) out.elements[i] = ctx.mul(w, q.elements[i]);
  out.n = ctx.mul(ctx.square(w), q.n);
  for (std::size_t slot = 0; slot < 6; ++slot) {
    if (q.witnesses[slot]) out.witnesses[slot] = ctx.mul(w, *q.witnesses[slot]);
  }
  return out;
}

}  // namespace quadtuple
