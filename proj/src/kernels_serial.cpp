#include "quadtuple/kernels.hpp"

namespace quadtuple::kernels::serial {

std::vector<QuadInt> norm_scan(const Integer& d, const Integer& N, const Integer& y_max) {
  std::vector<QuadInt> hits;
  for (Integer y = 0; y <= y_max; ++y) {
    if (auto x = is_perfect_square(d * y * y + N)) hits.emplace_back(*x, y);
  }
  return hits;
}

std::optional<ReprHit> repr_search(const Integer& d, const QuadInt& n, long bound,
                                   bool parity_pruning) {
  for (long x1 = 0; x1 <= bound; ++x1) {
    for (long y1 = 0; y1 <= bound; ++y1) {
      // x2^2 + d*y2^2 = x1^2 + d*y1^2 - n.a and 2*(x1*y1 - x2*y2) = n.b
      const Integer rest = Integer(x1) * x1 + d * y1 * y1 - n.a;
      if (rest < 0) continue;
      const Integer cross = Integer(2) * x1 * y1 - n.b;
      for (long step = 0; step <= 2 * bound; ++step) {
        const long y2 = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        if (d * y2 * y2 > rest) break;
        if (parity_pruning && ((y1 + y2) % 2 == 0)) continue;
        if (y2 == 0) {
          if (cross != 0) continue;
          auto x2 = is_perfect_square(rest);
          if (!x2 || *x2 > bound) continue;
          return ReprHit{{x1, y1}, {*x2, 0}};
        }
        // 2*x2*y2 = cross
        const Integer den = 2 * Integer(y2);
        if (mpz_divisible_p(cross.get_mpz_t(), den.get_mpz_t()) == 0) continue;
        const Integer x2 = cross / den;
        if (abs(x2) > bound) continue;
        if (x2 * x2 + d * y2 * y2 == rest) return ReprHit{{x1, y1}, {x2, y2}};
      }
    }
  }
  return std::nullopt;
}

std::vector<char> square_free_flags(const std::vector<Integer>& values) {
  std::vector<char> flags(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) flags[i] = is_square_free(values[i]) ? 1 : 0;
  return flags;
}

}  // namespace quadtuple::kernels::serial
