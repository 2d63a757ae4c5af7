#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quadtuple/integer.hpp"
#include "quadtuple/quadring.hpp"

namespace quadtuple {

/// sqrt(d) = [a0; period, period, ...]. The period ends in 2*a0.
struct CFExpansion {
  Integer a0;
  std::vector<Integer> period;
};

struct PellFundamental {
  Integer x;
  Integer y;
  QuadInt element() const { return {x, y}; }
};

/// One representative per class of solutions of x^2 - d*y^2 = N, where two
/// solutions are in the same class when they differ by a factor ±unit^k.
struct NormEqClasses {
  Integer d;
  Integer N;
  std::vector<QuadInt> representatives;
  PellFundamental unit;

  bool solvable() const { return !representatives.empty(); }
};

/// x = 6*alpha + 3 (alpha absorbs the sign of x), y = 6*beta + sign_y.
struct Norm6Shape {
  Integer alpha;
  Integer beta;
  int sign_x = 1;
  int sign_y = 1;
};

enum class Parity { even, odd };

/// Residue shape of the fundamental unit (x, y) modulo 6. x is always ±4.
enum class UnitForm {
  y_pm1,     // (6a ± 4, 6b ± 1)
  y_plus3,   // (6a ± 4, 6b + 3)
};

struct UnitShape {
  UnitForm form;
  int sign_x;  // x ≡ 4*sign_x (mod 6)
  int sign_y;  // y ≡ sign_y (mod 6) for y_pm1; +1 for y_plus3
};

/// Why x^2 - d*y^2 = ±2 has no solution when 5 | d: squares mod 5 are
/// {0, 1, 4} and ±2 ≡ {2, 3} (mod 5). Cross-checked by the solver.
struct Pm2Certificate {
  Integer d;
  unsigned d_mod5 = 0;
  std::vector<unsigned> squares_mod5;
  std::vector<unsigned> targets_mod5;
  bool plus2_unsolvable = false;
  bool minus2_unsolvable = false;
};

struct SolveOptions {
  Integer max_abs_norm = 1'000'000;
};

// Continued-fraction machinery on a bare radicand. RingCtx uses these to cache
// its fundamental unit. Throws RingError for perfect squares or d < 2.
CFExpansion cf_sqrt(const Integer& d);
PellFundamental pell_fundamental_solution(const Integer& d);

CFExpansion cf_sqrt(const RingCtx& ctx);
PellFundamental fundamental_unit(const RingCtx& ctx);

// Class representatives of x^2 - d*y^2 = N via the classical search bound
// 0 <= y <= ceil(sqrt(|N|*(t+1)/(2d))), (t, u) the fundamental unit.
// Throws std::domain_error if N == 0 or |N| exceeds the cap.
NormEqClasses solve_norm_eq(const RingCtx& ctx, const Integer& N, const SolveOptions& opts = {});

// The first `limit` solutions in the order (|y|, |x|, x < 0, y < 0).
std::vector<QuadInt> enumerate_solutions(const RingCtx& ctx, const NormEqClasses& classes,
                                         std::size_t limit);

// Every solution with |y| <= y_max, in enumerate_solutions order.
std::vector<QuadInt> solutions_up_to(const RingCtx& ctx, const NormEqClasses& classes,
                                     const Integer& y_max);

// Throws HypothesisError unless d ≡ 15 (mod 60); ShapeError if the solver
// contradicts the residue argument.
Pm2Certificate check_pm2_unsolvable(const RingCtx& ctx);

// Throws HypothesisError if Nm(sol) != -6, ShapeError if the shape fails.
Norm6Shape norm6_shape(const RingCtx& ctx, const QuadInt& sol);

// First enumerated norm -6 solution whose shape has alpha + beta of the given
// parity. Throws HypothesisError unless d ≡ 15 (mod 60) and -6 is solvable.
QuadInt select_norm6_by_parity(const RingCtx& ctx, Parity parity);

// ((g^2 + 3)/3, g*h/3) for sol = (g, h) of norm -6; a norm 1 element with
// even first and odd second coordinate.
QuadInt unit_from_norm6(const RingCtx& ctx, const QuadInt& sol);

UnitShape fundamental_shape(const RingCtx& ctx);

// d mod 360 == 15 when d ≡ 15 (mod 60) and -6 is solvable; nothing when those
// hypotheses do not hold.
std::optional<bool> d_congruence_check(const RingCtx& ctx);

bool minus6_solvable(const RingCtx& ctx);

}  // namespace quadtuple
