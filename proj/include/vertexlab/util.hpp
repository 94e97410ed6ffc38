#pragma once

#include <cmath>
#include <complex>
#include <optional>

namespace vxl {

using cplx = std::complex<double>;

// w^e for integer e by binary exponentiation (deterministic, no branch cuts).
inline cplx ipow(cplx w, long long e) {
  if (e < 0) {
    w = cplx(1.0, 0.0) / w;
    e = -e;
  }
  cplx r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= w;
    w *= w;
    e >>= 1;
  }
  return r;
}

// Nearest m with |w - q^m| small in the relative sense |w q^{-m} - 1| < tol,
// scanned over |m| <= window.  Candidates are located through log|w| first;
// only the integer neighbors are tested, which keeps the scan O(1).
inline std::optional<int> nearest_q_exponent(cplx w, cplx q, int window, double tol) {
  const double aw = std::abs(w);
  const double aq = std::abs(q);
  if (!(aw > 0.0) || !(aq > 0.0) || aq >= 1.0) return std::nullopt;
  const double guess = std::log(aw) / std::log(aq);
  const int m0 = static_cast<int>(std::lround(guess));
  for (int m = m0 - 1; m <= m0 + 1; ++m) {
    if (m < -window || m > window) continue;
    if (std::abs(w * ipow(q, -m) - 1.0) < tol) return m;
  }
  return std::nullopt;
}

inline bool in_q_lattice(cplx w, cplx q, int window, double tol) {
  return nearest_q_exponent(w, q, window, tol).has_value();
}

}  // namespace vxl
