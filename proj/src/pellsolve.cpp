#include "quadtuple/pellsolve.hpp"

#include <algorithm>
#include <stdexcept>

#include "quadtuple/errors.hpp"
#include "quadtuple/kernels.hpp"

namespace quadtuple {

namespace {

bool same_class(const RingCtx& ctx, const QuadInt& p, const QuadInt& q, const Integer& N) {
  // p/q = p*conj(q)/N is then a norm 1 unit.
  const QuadInt prod = ctx.mul(p, conjugate(q));
  return mpz_divisible_p(prod.a.get_mpz_t(), N.get_mpz_t()) != 0 &&
         mpz_divisible_p(prod.b.get_mpz_t(), N.get_mpz_t()) != 0;
}

bool solution_order(const QuadInt& u, const QuadInt& v) {
  const int c1 = cmp(abs(u.b), abs(v.b));
  if (c1 != 0) return c1 < 0;
  const int c2 = cmp(abs(u.a), abs(v.a));
  if (c2 != 0) return c2 < 0;
  if ((u.a < 0) != (v.a < 0)) return u.a >= 0;
  return u.b >= 0 && v.b < 0;
}

void require_d15(const RingCtx& ctx, const char* what) {
  if (ctx.d_mod60() != 15)
    throw HypothesisError(std::string(what) + " requires d ≡ 15 (mod 60), d = " + to_string(ctx.d()));
}

// Walks start*step^k for k = 0, 1, 2, ... collecting every term with |y| <= y_max.
// |y| along such an orbit is unimodal in k, so the walk stops once |y| exceeds
// the bound while not decreasing.
void walk_orbit(const RingCtx& ctx, QuadInt cur, const QuadInt& step, const Integer& y_max,
                std::optional<Integer> prev_abs_y, std::vector<QuadInt>& out) {
  for (;;) {
    const Integer ay = abs(cur.b);
    if (ay <= y_max) {
      out.push_back(cur);
    } else if (prev_abs_y && ay >= *prev_abs_y) {
      return;
    }
    prev_abs_y = ay;
    cur = ctx.mul(cur, step);
  }
}

}  // namespace

CFExpansion cf_sqrt(const Integer& d) {
  if (d < 2) throw RingError("radicand must be at least 2");
  CFExpansion cf;
  cf.a0 = isqrt(d);
  if (cf.a0 * cf.a0 == d) throw RingError("radicand " + to_string(d) + " is a perfect square");
  // (P, Q) recurrence; the expansion is periodic from the first state on.
  const Integer p1 = cf.a0;
  const Integer q1 = d - cf.a0 * cf.a0;
  Integer p = p1, q = q1;
  for (;;) {
    const Integer a = (cf.a0 + p) / q;
    cf.period.push_back(a);
    p = a * q - p;
    q = (d - p * p) / q;
    if (p == p1 && q == q1) break;
  }
  return cf;
}

PellFundamental pell_fundamental_solution(const Integer& d) {
  const CFExpansion cf = cf_sqrt(d);
  Integer h_prev = 1, h = cf.a0;
  Integer k_prev = 0, k = 1;
  // Odd period: the first period yields norm -1, its square the unit.
  for (std::size_t i = 0;; ++i) {
    if (h * h - d * k * k == 1) return {h, k};
    const Integer& a = cf.period[i % cf.period.size()];
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
}

CFExpansion cf_sqrt(const RingCtx& ctx) { return cf_sqrt(ctx.d()); }

PellFundamental fundamental_unit(const RingCtx& ctx) {
  return {ctx.fundamental_unit().a, ctx.fundamental_unit().b};
}

NormEqClasses solve_norm_eq(const RingCtx& ctx, const Integer& N, const SolveOptions& opts) {
  if (N == 0) throw std::domain_error("norm equation target must be nonzero");
  if (abs(N) > opts.max_abs_norm)
    throw std::domain_error("|N| = " + to_string(abs(N)) + " exceeds the cap " +
                            to_string(opts.max_abs_norm));
  NormEqClasses classes{ctx.d(), N, {}, fundamental_unit(ctx)};

  // Smallest Y with Y^2 * 2d >= |N| * (t + 1).
  const Integer num = abs(N) * (classes.unit.x + 1);
  const Integer den = 2 * ctx.d();
  Integer y_max = isqrt(num / den);
  while (y_max * y_max * den < num) ++y_max;

  std::vector<QuadInt> candidates;
  for (const QuadInt& hit : kernels::parallel::norm_scan(ctx.d(), N, y_max)) {
    candidates.push_back(hit);
    if (hit.a != 0) candidates.emplace_back(-hit.a, hit.b);
  }
  std::stable_sort(candidates.begin(), candidates.end(), solution_order);
  for (const QuadInt& c : candidates) {
    const bool known = std::any_of(classes.representatives.begin(), classes.representatives.end(),
                                   [&](const QuadInt& r) { return same_class(ctx, c, r, N); });
    if (!known) classes.representatives.push_back(c);
  }
  return classes;
}

std::vector<QuadInt> solutions_up_to(const RingCtx& ctx, const NormEqClasses& classes,
                                     const Integer& y_max) {
  if (classes.d != ctx.d()) throw std::invalid_argument("classes belong to a different ring");
  const QuadInt eps = classes.unit.element();
  const QuadInt eps_inv = conjugate(eps);
  std::vector<QuadInt> found;
  for (const QuadInt& rep : classes.representatives) {
    walk_orbit(ctx, rep, eps, y_max, std::nullopt, found);
    walk_orbit(ctx, ctx.mul(rep, eps_inv), eps_inv, y_max, abs(rep.b), found);
  }
  std::vector<QuadInt> all;
  all.reserve(2 * found.size());
  for (const QuadInt& s : found) {
    all.push_back(s);
    all.push_back(-s);
  }
  std::sort(all.begin(), all.end(), solution_order);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<QuadInt> enumerate_solutions(const RingCtx& ctx, const NormEqClasses& classes,
                                         std::size_t limit) {
  if (!classes.solvable() || limit == 0) return {};
  Integer y_max = 1;
  for (const QuadInt& r : classes.representatives) y_max = std::max(y_max, Integer(abs(r.b)));
  for (;;) {
    auto sols = solutions_up_to(ctx, classes, y_max);
    if (sols.size() >= limit) {
      sols.resize(limit);
      return sols;
    }
    y_max *= 2;
  }
}

bool minus6_solvable(const RingCtx& ctx) { return solve_norm_eq(ctx, -6).solvable(); }

Pm2Certificate check_pm2_unsolvable(const RingCtx& ctx) {
  require_d15(ctx, "check_pm2_unsolvable");
  Pm2Certificate cert;
  cert.d = ctx.d();
  cert.d_mod5 = mod_u(ctx.d(), 5);
  for (unsigned r = 0; r < 5; ++r) {
    const unsigned sq = (r * r) % 5;
    if (std::find(cert.squares_mod5.begin(), cert.squares_mod5.end(), sq) == cert.squares_mod5.end())
      cert.squares_mod5.push_back(sq);
  }
  std::sort(cert.squares_mod5.begin(), cert.squares_mod5.end());
  cert.targets_mod5 = {2, 3};
  for (unsigned t : cert.targets_mod5) {
    if (std::find(cert.squares_mod5.begin(), cert.squares_mod5.end(), t) != cert.squares_mod5.end())
      throw ShapeError("±2 is a square modulo 5");
  }
  cert.plus2_unsolvable = !solve_norm_eq(ctx, 2).solvable();
  cert.minus2_unsolvable = !solve_norm_eq(ctx, -2).solvable();
  if (!cert.plus2_unsolvable || !cert.minus2_unsolvable)
    throw ShapeError("solver found a solution of x^2 - dy^2 = ±2 for d = " + to_string(ctx.d()));
  return cert;
}

Norm6Shape norm6_shape(const RingCtx& ctx, const QuadInt& sol) {
  if (ctx.norm(sol) != -6)
    throw HypothesisError("norm6_shape needs an element of norm -6, got " + format_quadint(sol));
  Norm6Shape shape;
  if (mod_u(sol.a, 6) != 3) throw ShapeError("x ≢ 3 (mod 6) in " + format_quadint(sol));
  shape.alpha = (sol.a - 3) / 6;
  shape.sign_x = 1;
  switch (mod_u(sol.b, 6)) {
    case 1:
      shape.beta = (sol.b - 1) / 6;
      shape.sign_y = 1;
      break;
    case 5:
      shape.beta = (sol.b + 1) / 6;
      shape.sign_y = -1;
      break;
    default:
      throw ShapeError("y ≢ ±1 (mod 6) in " + format_quadint(sol));
  }
  return shape;
}

QuadInt select_norm6_by_parity(const RingCtx& ctx, Parity parity) {
  require_d15(ctx, "select_norm6_by_parity");
  const NormEqClasses classes = solve_norm_eq(ctx, -6);
  if (!classes.solvable())
    throw HypothesisError("x^2 - dy^2 = -6 has no solution for d = " + to_string(ctx.d()));
  const unsigned want = parity == Parity::even ? 0 : 1;
  for (std::size_t limit = 8; limit <= (1U << 16); limit *= 2) {
    for (const QuadInt& s : enumerate_solutions(ctx, classes, limit)) {
      const Norm6Shape shape = norm6_shape(ctx, s);
      if (mod_u(shape.alpha + shape.beta, 2) == want) return s;
    }
  }
  throw ShapeError("no norm -6 solution of the requested parity among the first 65536");
}

QuadInt unit_from_norm6(const RingCtx& ctx, const QuadInt& sol) {
  if (ctx.norm(sol) != -6)
    throw HypothesisError("unit_from_norm6 needs an element of norm -6, got " + format_quadint(sol));
  if (mod_u(sol.a, 3) != 0) throw ShapeError("3 does not divide x in " + format_quadint(sol));
  QuadInt u((sol.a * sol.a + 3) / 3, sol.a * sol.b / 3);
  if (ctx.norm(u) != 1) throw ShapeError("derived unit " + format_quadint(u) + " has norm != 1");
  if (mod_u(u.a, 2) != 0 || mod_u(u.b, 2) != 1)
    throw ShapeError("derived unit " + format_quadint(u) + " is not (even, odd)");
  return u;
}

UnitShape fundamental_shape(const RingCtx& ctx) {
  const QuadInt& e = ctx.fundamental_unit();
  UnitShape shape{};
  switch (mod_u(e.a, 6)) {
    case 4: shape.sign_x = 1; break;
    case 2: shape.sign_x = -1; break;
    default: throw ShapeError("fundamental unit x ≢ ±4 (mod 6): " + format_quadint(e));
  }
  switch (mod_u(e.b, 6)) {
    case 1: shape.form = UnitForm::y_pm1; shape.sign_y = 1; break;
    case 5: shape.form = UnitForm::y_pm1; shape.sign_y = -1; break;
    case 3: shape.form = UnitForm::y_plus3; shape.sign_y = 1; break;
    default: throw ShapeError("fundamental unit y is even: " + format_quadint(e));
  }
  return shape;
}

std::optional<bool> d_congruence_check(const RingCtx& ctx) {
  if (ctx.d_mod60() != 15 || !minus6_solvable(ctx)) return std::nullopt;
  return ctx.d_mod360() == 15;
}

}  // namespace quadtuple
