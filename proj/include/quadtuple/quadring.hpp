#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quadtuple/integer.hpp"

namespace quadtuple {

/// An element a + b*sqrt(d) of Z[sqrt(d)]. Only the coordinates are stored;
/// the radicand lives in RingCtx, which owns every d-dependent operation.
struct QuadInt {
  Integer a;
  Integer b;

  QuadInt() = default;
  QuadInt(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
  QuadInt(long a_, long b_) : a(a_), b(b_) {}

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }
  friend QuadInt operator*(const Integer& k, const QuadInt& x) { return {k * x.a, k * x.b}; }
};

QuadInt conjugate(const QuadInt& x);

// Textual form "a,b": two base-10 signed integers, comma-separated, no spaces.
QuadInt parse_quadint(std::string_view text);
std::string format_quadint(const QuadInt& x);

/// Validated radicand with cached residues and the fundamental unit of
/// x^2 - d*y^2 = 1. Immutable; safe to share between threads.
class RingCtx {
 public:
  // Throws RingError if d < 2 or d is a perfect square, NonSquareFreeError if
  // d is not square-free and allow_nonsquarefree is false.
  explicit RingCtx(Integer d, bool allow_nonsquarefree = false);
  explicit RingCtx(long d, bool allow_nonsquarefree = false)
      : RingCtx(Integer(d), allow_nonsquarefree) {}

  const Integer& d() const { return d_; }
  unsigned d_mod4() const { return d_mod4_; }
  unsigned d_mod60() const { return d_mod60_; }
  unsigned d_mod360() const { return d_mod360_; }
  bool square_free() const { return square_free_; }
  // Minimal solution (x, y), y > 0, of x^2 - d*y^2 = 1, as the element x + y*sqrt(d).
  const QuadInt& fundamental_unit() const { return unit_; }

  QuadInt mul(const QuadInt& x, const QuadInt& y) const;
  QuadInt square(const QuadInt& x) const { return mul(x, x); }
  Integer norm(const QuadInt& x) const;
  QuadInt pow(const QuadInt& x, unsigned long e) const;

  // q with q*y == x when it exists in Z[sqrt(d)]. Throws std::domain_error if y == 0.
  std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) const;

  bool is_unit(const QuadInt& x) const;
  // Throws std::domain_error if x is not a unit.
  QuadInt unit_inverse(const QuadInt& x) const;

  // w with w*w == z, if any. Canonical root: positive rational part, or
  // positive sqrt(d) part when the rational part is zero.
  std::optional<QuadInt> sqrt_in_ring(const QuadInt& z) const;

  // Same contract as sqrt_in_ring, by enumerating factor pairs x*y = b/2.
  // Needs a factorization of b/2, so only practical for small coordinates.
  std::optional<QuadInt> sqrt_in_ring_by_divisors(const QuadInt& z) const;

  friend bool operator==(const RingCtx& x, const RingCtx& y) { return x.d_ == y.d_; }

 private:
  Integer d_;
  unsigned d_mod4_;
  unsigned d_mod60_;
  unsigned d_mod360_;
  bool square_free_;
  QuadInt unit_;
};

}  // namespace quadtuple
