#include "quadtuple/repr.hpp"

#include <stdexcept>

#include "quadtuple/errors.hpp"
#include "quadtuple/pellsolve.hpp"

namespace quadtuple {

const char* to_string(NClass c) {
  switch (c) {
    case NClass::odd: return "odd";
    case NClass::four_four: return "four_four";
    case NClass::four_four_plus_two: return "four_four_plus_two";
    case NClass::two_mod_four: return "two_mod_four";
    case NClass::T: return "T";
  }
  return "T";
}

NClass classify_n(const QuadInt& n) {
  const unsigned a4 = mod_u(n.a, 4);
  const unsigned b4 = mod_u(n.b, 4);
  if (a4 % 2 == 1) return b4 % 2 == 0 ? NClass::odd : NClass::T;
  if (a4 == 0 && b4 == 0) return NClass::four_four;
  if (a4 == 0 && b4 == 2) return NClass::four_four_plus_two;
  if (a4 == 2 && b4 == 0) return NClass::two_mod_four;
  return NClass::T;
}

bool no_quadruple_if_T(const RingCtx& ctx, const QuadInt& n) {
  if (ctx.d_mod4() != 3)
    throw HypothesisError("the T criterion needs d ≡ 3 (mod 4), d = " + to_string(ctx.d()));
  return classify_n(n) == NClass::T;
}

std::optional<NonRepCertificate> certify_nonrepresentable(const RingCtx& ctx, const QuadInt& n) {
  if (classify_n(n) != NClass::two_mod_four) return std::nullopt;
  if (ctx.d_mod60() != 15) return std::nullopt;
  NonRepCertificate cert;
  cert.n = n;
  cert.u = QuadInt(n.a / 2, n.b / 2);
  cert.norm_u = ctx.norm(cert.u);
  if (cert.norm_u != 1) return std::nullopt;
  cert.ring_checks.d_mod_60 = ctx.d_mod60();
  cert.ring_checks.minus6_solvable = minus6_solvable(ctx);
  if (!cert.ring_checks.minus6_solvable) return std::nullopt;
  const Pm2Certificate pm2 = check_pm2_unsolvable(ctx);
  cert.ring_checks.pm2_unsolvable = pm2.plus2_unsolvable && pm2.minus2_unsolvable;
  if (!cert.ring_checks.pm2_unsolvable) return std::nullopt;
  return cert;
}

std::optional<kernels::ReprHit> search_repr(const RingCtx& ctx, const QuadInt& n, long bound,
                                            const SearchOptions& opts) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
  return opts.parallel ? kernels::parallel::repr_search(ctx.d(), n, bound, opts.parity_pruning)
                       : kernels::serial::repr_search(ctx.d(), n, bound, opts.parity_pruning);
}

}  // namespace quadtuple
