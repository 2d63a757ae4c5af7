#include "quadtuple/integer.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

namespace quadtuple {

namespace {

constexpr unsigned kTrialBound = 1'000'000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j <= kTrialBound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::atomic<std::uint64_t> g_rho_seed{kDefaultRhoSeed};

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's cycle finding on x -> x^2 + c (mod n). Returns a nontrivial factor
// of the odd composite n.
Integer brent_rho(const Integer& n, std::mt19937_64& rng) {
  for (;;) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1'000'000'007ULL)) % n;
    if (c == 0) c = 1;
    Integer y = Integer(static_cast<unsigned long>(rng() % 1'000'000'007ULL)) % n;
    Integer g = 1, q = 1, x, ys;
    unsigned long r = 1;
    constexpr unsigned long kBlock = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBlock, r - k); ++i) {
          y = (y * y + c) % n;
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Block product collapsed; walk back one step at a time.
      do {
        ys = (ys * ys + c) % n;
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::mt19937_64& rng, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  if (auto root = is_perfect_square(n)) {
    factor_large(*root, rng, out);
    factor_large(*root, rng, out);
    return;
  }
  Integer f = brent_rho(n, rng);
  factor_large(f, rng, out);
  factor_large(n / f, rng, out);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  return Integer(std::string(text), 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

std::uint64_t rho_seed() { return g_rho_seed.load(std::memory_order_relaxed); }
void set_rho_seed(std::uint64_t seed) { g_rho_seed.store(seed, std::memory_order_relaxed); }

std::vector<Integer> factorize(const Integer& n) {
  if (n <= 0) throw std::domain_error("factorize requires n >= 1");
  std::vector<Integer> out;
  Integer rest = n;
  for (unsigned p : small_primes()) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      out.emplace_back(p);
      rest /= p;
    }
  }
  if (rest == 1) return out;
  if (rest < Integer(kTrialBound) * kTrialBound) {
    out.push_back(rest);
    return out;
  }
  std::mt19937_64 rng(rho_seed());
  std::vector<Integer> large;
  factor_large(rest, rng, large);
  std::sort(large.begin(), large.end());
  out.insert(out.end(), large.begin(), large.end());
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> result{1};
  const auto primes = factorize(n);
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t base = result.size();
    Integer power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= primes[i];
      for (std::size_t k = 0; k < base; ++k) result.push_back(result[k] * power);
    }
    i = j;
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_square_free(const Integer& n) {
  const auto primes = factorize(abs(n));
  return std::adjacent_find(primes.begin(), primes.end()) == primes.end();
}

unsigned long mod_u(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

}  // namespace quadtuple
