#pragma once

#include <span>

#include "vertexlab/chars.hpp"
#include "vertexlab/params.hpp"
#include "vertexlab/util.hpp"

namespace vxl {

struct QFunctionConfig {
  // stop the infinite products once |q^n arg| drops below this
  double truncation_floor = 1e-18;
  int max_terms = 10000;
  // phi snaps to an exact 0 when the argument is within zero_tol of a lattice
  // point q^{-m}, 0 <= m <= zero_scan_window; downstream vanishing tests need
  // clean zeros instead of 1e-16 leftovers
  double zero_tol = 1e-12;
  int zero_scan_window = 64;
};

// process-wide default, settable once at startup (the CLI fills it from the
// "qseries" config key)
QFunctionConfig& default_qconfig();

// phi(x) = prod_{n>=0} (1 - q^n x), |q| < 1
cplx phi(cplx x, cplx q, const QFunctionConfig& cfg = default_qconfig());

// same product with the n = m factor removed; finite and nonzero at x = q^{-m}
cplx phi_skip(cplx x, int m, cplx q, const QFunctionConfig& cfg = default_qconfig());

// phi away from x = 1, phi(q) on the branch |x - 1| < zero_tol
cplx phi_circle(cplx x, cplx q, const QFunctionConfig& cfg = default_qconfig());

// theta(z) = phi(qz) phi(1/z); simple zeros exactly on q^Z
cplx theta(cplx z, cplx q, const QFunctionConfig& cfg = default_qconfig());

// u(s, z) = theta(sz) / (theta(s) theta(z))
cplx u_kernel(cplx s, cplx z, cplx q, const QFunctionConfig& cfg = default_qconfig());

// multiplicative extension prod_terms phi(eval(mono))^{mult}; a vanishing phi
// under a negative multiplicity raises PoleHit naming the monomial
cplx phi_virtual(const VirtualCharacter& v, std::span<const cplx> x, const Params& p,
                 const QFunctionConfig& cfg = default_qconfig());

inline cplx phi(cplx x, const Params& p, const QFunctionConfig& cfg = default_qconfig()) {
  return phi(x, p.q, cfg);
}
inline cplx theta(cplx z, const Params& p, const QFunctionConfig& cfg = default_qconfig()) {
  return theta(z, p.q, cfg);
}

}  // namespace vxl
