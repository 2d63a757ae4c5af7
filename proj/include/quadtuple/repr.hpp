#pragma once

#include <optional>

#include "quadtuple/kernels.hpp"
#include "quadtuple/quadring.hpp"

namespace quadtuple {

/// The four residue shapes of S and the complement T:
///   odd                 (2m+1) + 2k sqrt(d)
///   four_four           4m + 4k sqrt(d)
///   four_four_plus_two  4m + (4k+2) sqrt(d)
///   two_mod_four        (4m+2) + 4k sqrt(d)
enum class NClass { odd, four_four, four_four_plus_two, two_mod_four, T };

const char* to_string(NClass c);

NClass classify_n(const QuadInt& n);

// For d ≡ 3 (mod 4), n in T admits no D(n) quadruple. Returns true exactly
// when that nonexistence applies. Throws HypothesisError for d ≢ 3 (mod 4).
bool no_quadruple_if_T(const RingCtx& ctx, const QuadInt& n);

struct RingChecks {
  unsigned d_mod_60 = 0;
  bool minus6_solvable = false;
  bool pm2_unsolvable = false;
};

/// Recorded hypotheses under which n = 2u, Nm(u) = 1, is not a difference of
/// two squares in Z[sqrt(d)].
struct NonRepCertificate {
  QuadInt n;
  QuadInt u;
  Integer norm_u;
  RingChecks ring_checks;
};

// A certificate iff n = (4m+2, 4k), u = n/2 has norm 1, d ≡ 15 (mod 60), -6 is
// solvable and ±2 are not. Silent (empty) otherwise.
std::optional<NonRepCertificate> certify_nonrepresentable(const RingCtx& ctx, const QuadInt& n);

struct SearchOptions {
  // Skip y1 + y2 even; only sound for n of the certified shape with d ≡ 3 (mod 4).
  bool parity_pruning = false;
  bool parallel = true;
};

// First (p, q) with p^2 - q^2 = n, |coordinates| <= bound, p with nonnegative
// coordinates, in the canonical scan order of kernels.hpp.
std::optional<kernels::ReprHit> search_repr(const RingCtx& ctx, const QuadInt& n, long bound,
                                            const SearchOptions& opts = {});

}  // namespace quadtuple
