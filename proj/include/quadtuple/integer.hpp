#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quadtuple {

using Integer = mpz_class;

// Parses a base-10 signed integer ("-12", "7"). No whitespace, no '+'.
// Throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

// Returns the root when n is a perfect square (n >= 0), otherwise nothing.
std::optional<Integer> is_perfect_square(const Integer& n);

// Seed for the randomized rho stage of factorize(). The factorization itself
// is unique; the seed only affects which cycle is walked.
inline constexpr std::uint64_t kDefaultRhoSeed = 0x5eed'0f'd1'0f'a7ULL;
std::uint64_t rho_seed();
void set_rho_seed(std::uint64_t seed);

// Prime factors of n >= 1 with multiplicity, ascending. factorize(1) is empty.
// Trial division below 10^6, then Brent's variant of Pollard rho.
// Throws std::domain_error for n <= 0.
std::vector<Integer> factorize(const Integer& n);

// All positive divisors of n >= 1, ascending.
std::vector<Integer> divisors(const Integer& n);

bool is_square_free(const Integer& n);

// Non-negative residue of n modulo m (m > 0).
unsigned long mod_u(const Integer& n, unsigned long m);

}  // namespace quadtuple
