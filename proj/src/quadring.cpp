#include "quadtuple/quadring.hpp"

#include <stdexcept>

#include "quadtuple/errors.hpp"
#include "quadtuple/pellsolve.hpp"

namespace quadtuple {

QuadInt conjugate(const QuadInt& x) { return {x.a, -x.b}; }

QuadInt parse_quadint(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
    throw std::invalid_argument("expected 'a,b', got '" + std::string(text) + "'");
  return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
}

std::string format_quadint(const QuadInt& x) { return to_string(x.a) + "," + to_string(x.b); }

RingCtx::RingCtx(Integer d, bool allow_nonsquarefree) : d_(std::move(d)) {
  if (d_ < 2) throw RingError("radicand must be at least 2, got " + to_string(d_));
  if (is_perfect_square(d_)) throw RingError("radicand " + to_string(d_) + " is a perfect square");
  d_mod4_ = mod_u(d_, 4);
  d_mod60_ = mod_u(d_, 60);
  d_mod360_ = mod_u(d_, 360);
  square_free_ = is_square_free(d_);
  if (!square_free_ && !allow_nonsquarefree)
    throw NonSquareFreeError("radicand " + to_string(d_) + " is not square-free");
  const auto unit = pell_fundamental_solution(d_);
  unit_ = QuadInt(unit.x, unit.y);
}

QuadInt RingCtx::mul(const QuadInt& x, const QuadInt& y) const {
  return {x.a * y.a + d_ * x.b * y.b, x.a * y.b + x.b * y.a};
}

Integer RingCtx::norm(const QuadInt& x) const { return x.a * x.a - d_ * x.b * x.b; }

QuadInt RingCtx::pow(const QuadInt& x, unsigned long e) const {
  QuadInt result(1, 0);
  QuadInt base = x;
  while (e != 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

std::optional<QuadInt> RingCtx::exact_div(const QuadInt& x, const QuadInt& y) const {
  if (y.is_zero()) throw std::domain_error("division by the zero element");
  const Integer n = norm(y);
  const QuadInt num = mul(x, conjugate(y));
  if (mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) == 0 ||
      mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t()) == 0)
    return std::nullopt;
  QuadInt q;
  mpz_divexact(q.a.get_mpz_t(), num.a.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.b.get_mpz_t(), num.b.get_mpz_t(), n.get_mpz_t());
  return q;
}

bool RingCtx::is_unit(const QuadInt& x) const { return abs(norm(x)) == 1; }

QuadInt RingCtx::unit_inverse(const QuadInt& x) const {
  const Integer n = norm(x);
  if (n == 1) return conjugate(x);
  if (n == -1) return -conjugate(x);
  throw std::domain_error("element " + format_quadint(x) + " is not a unit");
}

namespace {

QuadInt canonical_root(QuadInt w) {
  if (w.a < 0 || (w.a == 0 && w.b < 0)) w = -w;
  return w;
}

}  // namespace

// Nm(w)^2 = Nm(z), so Nm(w) = ±m with m = sqrt(Nm(z)). Then
// x^2 = (A ± m)/2 and d*y^2 = (A ∓ m)/2, and the sign of y comes from 2xy = B.
std::optional<QuadInt> RingCtx::sqrt_in_ring(const QuadInt& z) const {
  if (z.is_zero()) return QuadInt(0, 0);
  const auto m = is_perfect_square(norm(z));
  if (!m) return std::nullopt;
  for (const Integer& nw : {*m, Integer(-*m)}) {
    const Integer twice_x2 = z.a + nw;
    const Integer twice_dy2 = z.a - nw;
    if (mpz_even_p(twice_x2.get_mpz_t()) == 0) continue;
    const auto x = is_perfect_square(twice_x2 / 2);
    if (!x) continue;
    const Integer dy2 = twice_dy2 / 2;
    if (mpz_divisible_p(dy2.get_mpz_t(), d_.get_mpz_t()) == 0) continue;
    const auto y = is_perfect_square(dy2 / d_);
    if (!y) continue;
    if (2 * *x * *y == z.b) return canonical_root({*x, *y});
    if (-2 * *x * *y == z.b) return canonical_root({*x, -*y});
  }
  return std::nullopt;
}

std::optional<QuadInt> RingCtx::sqrt_in_ring_by_divisors(const QuadInt& z) const {
  if (z.b == 0) {
    if (auto s = is_perfect_square(z.a)) return QuadInt(*s, 0);
    if (z.a != 0 && mpz_divisible_p(z.a.get_mpz_t(), d_.get_mpz_t()) != 0) {
      if (auto s = is_perfect_square(z.a / d_)) return QuadInt(0, *s);
    }
    return std::nullopt;
  }
  if (mpz_odd_p(z.b.get_mpz_t()) != 0) return std::nullopt;
  const Integer half = z.b / 2;
  // w and -w are both roots, so positive x covers every candidate.
  for (const Integer& x : divisors(abs(half))) {
    const Integer y = half / x;
    if (x * x + d_ * y * y == z.a) return QuadInt(x, y);
  }
  return std::nullopt;
}

}  // namespace quadtuple
