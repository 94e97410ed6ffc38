// Benchmark of the OpenMP kernels against their serial references.  The two
// paths must agree bit for bit; timings show the parallel speedup.

#include <chrono>
#include <cstdio>
#include <string>

#include "vertexlab/mellin.hpp"
#include "vertexlab/monodromy.hpp"
#include "vertexlab/reduction.hpp"
#include "vertexlab/selftest.hpp"

using vxl::cplx;

namespace {

template <class F>
double time_s(F&& f, int reps = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-28s %10.3f ms %10.3f ms   speedup %5.2fx   %s\n", name.c_str(), serial * 1e3,
              parallel * 1e3, serial / parallel, equal ? "bit-equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
  vxl::set_thread_count(threads);
  std::printf("threads available: %d\n", vxl::max_thread_count());

  const auto p = vxl::admissible_point(7, 2, 4);
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 3}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::elementary1(2, 4);

  {
    cplx a, b;
    const double ts = time_s([&] { a = vxl::quadrature_oracle_serial(rho, spec, 128); });
    const double tp = time_s([&] { b = vxl::quadrature_oracle(rho, spec, 128); });
    row("quadrature k=2 N=128", ts, tp, a == b);
  }
  {
    vxl::DegreeLedger a, b;
    const double ts = time_s([&] { a = vxl::vertex_series_serial(rho, spec, 8); });
    const double tp = time_s([&] { b = vxl::vertex_series(rho, spec, 8); });
    bool eq = a.contributions.size() == b.contributions.size();
    for (std::size_t i = 0; eq && i < a.contributions.size(); ++i)
      eq = a.contributions[i] == b.contributions[i];
    row("residue series D=8", ts, tp, eq);
  }
  {
    vxl::RestrictionMatrix a, b;
    const double ts = time_s([&] { a = vxl::restriction_matrix_serial(vxl::Chamber::plus, p); });
    const double tp = time_s([&] { b = vxl::restriction_matrix(vxl::Chamber::plus, p); });
    bool eq = true;
    for (std::size_t i = 0; i < a.S.size(); ++i)
      for (std::size_t j = 0; j < a.S.size(); ++j) eq = eq && a.S[i][j] == b.S[i][j];
    row("restriction matrix (2,4)", ts, tp, eq);
  }
  return 0;
}
