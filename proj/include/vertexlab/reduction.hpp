#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vxl {

// Neumaier-compensated accumulator.
struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;

  void add(double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }

  double value() const { return s + c; }
};

struct ComplexSum {
  NeumaierSum re, im;

  void add(std::complex<double> v) {
    re.add(v.real());
    im.add(v.imag());
  }

  std::complex<double> value() const { return {re.value(), im.value()}; }
};

// Sum f(0..n-1) with a fixed chunk decomposition: every chunk is accumulated
// serially in index order, chunks are combined serially in chunk order.  The
// result is bit-identical for any OpenMP thread count, including none.
// Exceptions are captured per chunk and the lowest-index one is rethrown, so
// failures are reproducible too.
template <class F>
std::complex<double> map_sum(std::size_t n, F&& f) {
  constexpr std::size_t kChunk = 1024;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<std::complex<double>> partial(nchunks, {0.0, 0.0});
  std::vector<std::exception_ptr> errors(nchunks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
    try {
      const std::size_t lo = static_cast<std::size_t>(ci) * kChunk;
      const std::size_t hi = std::min(lo + kChunk, n);
      ComplexSum acc;
      for (std::size_t i = lo; i < hi; ++i) acc.add(f(i));
      partial[static_cast<std::size_t>(ci)] = acc.value();
    } catch (...) {
      errors[static_cast<std::size_t>(ci)] = std::current_exception();
    }
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  ComplexSum total;
  for (const auto& v : partial) total.add(v);
  return total.value();
}

// Serial reference for the kernel above; used by tests and the benchmark.
template <class F>
std::complex<double> map_sum_serial(std::size_t n, F&& f) {
  constexpr std::size_t kChunk = 1024;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  ComplexSum total;
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    const std::size_t lo = ci * kChunk;
    const std::size_t hi = std::min(lo + kChunk, n);
    ComplexSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(f(i));
    total.add(acc.value());
  }
  return total.value();
}

inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

inline int max_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace vxl
