#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "quadtuple/integer.hpp"
#include "quadtuple/quadring.hpp"

namespace quadtuple {

/// Which factorization of -6 supplies the norm -6 element (g, h):
/// first takes h ≡ 1 (mod 6), second takes h ≡ -1 (mod 6).
enum class Factorization { first, second };

const char* to_string(Factorization f);

/// n = (4m + 2, 4k).
struct TargetN {
  Integer m;
  Integer k;
  QuadInt n;
};

TargetN make_target(const Integer& m, const Integer& k);

// Index pairs in the fixed order 12, 13, 14, 23, 24, 34.
inline constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// "12", "13", ... for pair slot i.
std::string pair_label(std::size_t slot);

struct Quadruple {
  std::array<QuadInt, 4> elements;
  QuadInt n;
  // witnesses[i]^2 == elements[p] * elements[q] + n for kPairs[i] = (p, q).
  std::array<std::optional<QuadInt>, 6> witnesses;
};

struct ConstructionTrace {
  QuadInt gamma_delta;  // chosen solution of x^2 - dy^2 = -6
  Factorization factorization = Factorization::first;
  QuadInt alpha1;       // (-g, h)
  QuadInt alpha2;       // (g, h) * (2m + 1, 2k); alpha1 * alpha2 = 3n
  QuadInt unit_a;
  QuadInt r;
  QuadInt b;
  QuadInt alpha_sym;    // (alpha1 - alpha2) / 2
  int unit_index = 0;   // index actually used after skipping degenerate sets
};

struct ConstructOptions {
  int retry_budget = 64;
};

// j = 0, 1, -1, 2, -2, ... for index 0, 1, 2, 3, 4, ...
long zigzag(int index);

// u_index = unit_from_norm6(g, h) * eps^(2 * zigzag(index)): a norm 1 unit
// with even first and odd second coordinate.
QuadInt unit_candidate(const RingCtx& ctx, const QuadInt& gamma_delta, int index);

// Builds {a, b, a+b+2r, a+4b+4r} with property D(4m+2 + 4k sqrt(d)).
// Throws HypothesisError when d ≢ 15 (mod 60), -6 is unsolvable or m + k is
// odd; BudgetError when retry_budget consecutive unit indices are degenerate.
std::pair<Quadruple, ConstructionTrace> construct_quadruple(
    const RingCtx& ctx, const Integer& m, const Integer& k, int unit_index = 0,
    Factorization choice = Factorization::first, const ConstructOptions& opts = {});

// True iff all four elements are nonzero and pairwise distinct.
bool all_nonzero_distinct(const std::array<QuadInt, 4>& elements);

struct PairCheck {
  int i = 0;
  int j = 0;
  QuadInt value;                    // elements[i] * elements[j] + n
  std::optional<bool> witness_ok;   // empty when no witness was stored
  std::optional<QuadInt> root;      // from sqrt_in_ring
  bool pass = false;
};

struct VerificationReport {
  std::array<PairCheck, 6> pairs;
  bool nondegenerate = false;

  bool all_pass() const;
};

// Checks every pair twice: the stored witness (if any) and an independent
// sqrt_in_ring. A pair passes when a root exists and the witness, if given,
// squares to the same value.
VerificationReport verify_quadruple(const RingCtx& ctx, const Quadruple& q);

// {w*a_i} with property D(w^2 n); witnesses scale by w. Throws
// std::domain_error for w == 0.
Quadruple scale_quadruple(const RingCtx& ctx, const Quadruple& q, const QuadInt& w);

}  // namespace quadtuple
