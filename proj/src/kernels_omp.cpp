#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>

#include <omp.h>

#include "quadtuple/kernels.hpp"

namespace quadtuple::kernels {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool fits_native(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 100;
}

i128 to_i128(const Integer& v) {
  // |v| < 2^100 is checked by the caller.
  const Integer mag = abs(v);
  const Integer hi = mag >> 64;
  const Integer lo = mag - (hi << 64);
  u128 out = (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
  return v < 0 ? -static_cast<i128>(out) : static_cast<i128>(out);
}

// floor(sqrt(v)) for 0 <= v < 2^126.
std::uint64_t isqrt_native(u128 v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

namespace parallel {

std::vector<QuadInt> norm_scan(const Integer& d, const Integer& N, const Integer& y_max) {
  if (!fits_native(d) || !fits_native(N) || mpz_sizeinbase(y_max.get_mpz_t(), 2) > 31 ||
      d * y_max * y_max + abs(N) >= Integer(1) << 120)
    return serial::norm_scan(d, N, y_max);

  const i128 dd = to_i128(d);
  const i128 nn = to_i128(N);
  const long ymax = y_max.get_si();
  std::vector<std::vector<std::pair<long, std::uint64_t>>> per_thread(omp_get_max_threads());

#pragma omp parallel
  {
    auto& local = per_thread[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long y = 0; y <= ymax; ++y) {
      const i128 v = dd * y * y + nn;
      if (v < 0) continue;
      const std::uint64_t r = isqrt_native(static_cast<u128>(v));
      if (static_cast<i128>(r) * r == v) local.emplace_back(y, r);
    }
  }

  std::vector<std::pair<long, std::uint64_t>> merged;
  for (auto& local : per_thread) merged.insert(merged.end(), local.begin(), local.end());
  std::sort(merged.begin(), merged.end());
  std::vector<QuadInt> hits;
  hits.reserve(merged.size());
  for (const auto& [y, x] : merged) hits.emplace_back(Integer(static_cast<unsigned long>(x)), Integer(y));
  return hits;
}

std::optional<ReprHit> repr_search(const Integer& d, const QuadInt& n, long bound,
                                   bool parity_pruning) {
  if (bound < 0) return std::nullopt;
  if (!fits_native(d) || !fits_native(n.a) || !fits_native(n.b) || bound > (1L << 20) ||
      d * bound * bound + Integer(bound) * bound + abs(n.a) >= Integer(1) << 124)
    return serial::repr_search(d, n, bound, parity_pruning);

  const i128 dd = to_i128(d);
  const i128 na = to_i128(n.a);
  const i128 nb = to_i128(n.b);

  struct Found {
    long y1 = 0;
    long x2 = 0;
    long y2 = 0;
    bool hit = false;
  };
  std::vector<Found> per_x1(static_cast<std::size_t>(bound) + 1);
  std::atomic<long> best_x1{LONG_MAX};

  // Each x1 finds its own first hit in canonical order; the smallest x1 with
  // a hit wins, so the answer does not depend on thread scheduling.
#pragma omp parallel for schedule(dynamic, 1)
  for (long x1 = 0; x1 <= bound; ++x1) {
    if (x1 > best_x1.load(std::memory_order_relaxed)) continue;
    Found found;
    for (long y1 = 0; y1 <= bound && !found.hit; ++y1) {
      const i128 rest = static_cast<i128>(x1) * x1 + dd * y1 * y1 - na;
      if (rest < 0) continue;
      const i128 cross = static_cast<i128>(2) * x1 * y1 - nb;
      for (long step = 0; step <= 2 * bound; ++step) {
        const long y2 = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        const i128 dy2 = dd * y2 * y2;
        if (dy2 > rest) break;
        if (parity_pruning && ((y1 + y2) % 2 == 0)) continue;
        if (y2 == 0) {
          if (cross != 0) continue;
          const std::uint64_t r = isqrt_native(static_cast<u128>(rest));
          if (static_cast<i128>(r) * r != rest || r > static_cast<std::uint64_t>(bound)) continue;
          found = {y1, static_cast<long>(r), 0, true};
          break;
        }
        const i128 den = static_cast<i128>(2) * y2;
        if (cross % den != 0) continue;
        const i128 x2 = cross / den;
        if (x2 > bound || x2 < -bound) continue;
        if (x2 * x2 + dy2 == rest) {
          found = {y1, static_cast<long>(x2), y2, true};
          break;
        }
      }
    }
    if (found.hit) {
      per_x1[static_cast<std::size_t>(x1)] = found;
      long current = best_x1.load(std::memory_order_relaxed);
      while (x1 < current && !best_x1.compare_exchange_weak(current, x1)) {
      }
    }
  }

  const long x1 = best_x1.load();
  if (x1 == LONG_MAX) return std::nullopt;
  const Found& f = per_x1[static_cast<std::size_t>(x1)];
  return ReprHit{{x1, f.y1}, {f.x2, f.y2}};
}

std::vector<char> square_free_flags(const std::vector<Integer>& values) {
  std::vector<char> flags(values.size());
  const long count = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) flags[i] = is_square_free(values[i]) ? 1 : 0;
  return flags;
}

}  // namespace parallel

}  // namespace quadtuple::kernels
