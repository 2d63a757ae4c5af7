#pragma once

// Data-parallel scans. Every kernel has a serial reference built on Integer
// arithmetic and an OpenMP version on native 128-bit integers; the two must
// return identical results (tests/test_kernels.cpp). The parallel versions
// fall back to the serial path when inputs do not fit the native range.

#include <optional>
#include <utility>
#include <vector>

#include "quadtuple/integer.hpp"
#include "quadtuple/quadring.hpp"

namespace quadtuple::kernels {

struct ReprHit {
  QuadInt p;  // n = p^2 - q^2
  QuadInt q;
};

// Scan order for repr_search, which fixes the "first" hit:
// x1 = 0..bound, y1 = 0..bound, y2 = 0, 1, -1, 2, -2, ..., then x2 from the
// sqrt(d) coordinate (y2 != 0) or the nonnegative root (y2 == 0).
// With parity_pruning, pairs with y1 + y2 even are skipped.

namespace serial {

// (x, y) with x >= 0, 0 <= y <= y_max, x^2 - d*y^2 = N; ascending (y, x).
std::vector<QuadInt> norm_scan(const Integer& d, const Integer& N, const Integer& y_max);

std::optional<ReprHit> repr_search(const Integer& d, const QuadInt& n, long bound,
                                   bool parity_pruning);

std::vector<char> square_free_flags(const std::vector<Integer>& values);

}  // namespace serial

namespace parallel {

std::vector<QuadInt> norm_scan(const Integer& d, const Integer& N, const Integer& y_max);

std::optional<ReprHit> repr_search(const Integer& d, const QuadInt& n, long bound,
                                   bool parity_pruning);

std::vector<char> square_free_flags(const std::vector<Integer>& values);

}  // namespace parallel

int max_threads();

}  // namespace quadtuple::kernels
