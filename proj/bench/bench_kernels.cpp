// Serial reference vs OpenMP kernels. Usage: bench_kernels [bound] [y_max]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "quadtuple/kernels.hpp"

namespace {

using quadtuple::Integer;
using quadtuple::QuadInt;
namespace kernels = quadtuple::kernels;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::cout << name << "\n  serial   " << serial_ms << " ms\n  parallel " << parallel_ms
            << " ms  (x" << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << ")  "
            << (same ? "results match" : "RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const long bound = argc > 1 ? std::atol(argv[1]) : 200;
  const Integer y_max = argc > 2 ? Integer(argv[2]) : Integer(200000);
  std::cout << "threads: " << kernels::max_threads() << "\n";

  {
    // n = 2 in Z[sqrt(15)] has no representation, so both scans run to the end.
    const Integer d = 15;
    const QuadInt n(2, 0);
    std::optional<kernels::ReprHit> s, p;
    const double ts = time_ms([&] { s = kernels::serial::repr_search(d, n, bound, false); });
    const double tp = time_ms([&] { p = kernels::parallel::repr_search(d, n, bound, false); });
    report("repr_search d=15 n=2 bound=" + std::to_string(bound), ts, tp,
           s.has_value() == p.has_value());
  }
  {
    const Integer d = 1455;
    const Integer N = -6;
    std::vector<QuadInt> s, p;
    const double ts = time_ms([&] { s = kernels::serial::norm_scan(d, N, y_max); });
    const double tp = time_ms([&] { p = kernels::parallel::norm_scan(d, N, y_max); });
    report("norm_scan d=1455 N=-6 y_max=" + y_max.get_str(), ts, tp, s == p);
  }
  {
    std::vector<Integer> ds;
    for (long a = -200; a <= 200; ++a) ds.push_back(360 * (10 * Integer(a) * a + a) + 15);
    std::vector<char> s, p;
    const double ts = time_ms([&] { s = kernels::serial::square_free_flags(ds); });
    const double tp = time_ms([&] { p = kernels::parallel::square_free_flags(ds); });
    report("square_free_flags alpha in [-200, 200]", ts, tp, s == p);
  }
  return 0;
}
