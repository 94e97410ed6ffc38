#include "vertexlab/qseries.hpp"

#include <cmath>
#include <sstream>

#include "vertexlab/errors.hpp"

namespace vxl {

QFunctionConfig& default_qconfig() {
  static QFunctionConfig cfg;
  return cfg;
}

namespace {

// x within zero_tol of some q^{-m}, 0 <= m <= window?  Zeros of phi all have
// |x| >= ~1, so the scan short-circuits for small arguments.
bool at_phi_zero(cplx x, cplx q, const QFunctionConfig& cfg, int skip = -1) {
  if (std::abs(x) < 1.0 - 1e-6) return false;
  const auto m = nearest_q_exponent(x, q, cfg.zero_scan_window, cfg.zero_tol);
  return m && *m <= 0 && -*m != skip;
}

cplx phi_product(cplx x, cplx q, const QFunctionConfig& cfg, int skip) {
  cplx prod(1.0, 0.0);
  cplx t = x;  // q^n x
  for (int n = 0; n < cfg.max_terms; ++n) {
    if (n != skip) prod *= (cplx(1.0, 0.0) - t);
    t *= q;
    if (std::abs(t) < cfg.truncation_floor) return prod;
  }
  throw NonConvergent("phi: truncation floor not reached within max_terms");
}

}  // namespace

cplx phi(cplx x, cplx q, const QFunctionConfig& cfg) {
  if (std::abs(q) >= 1.0) throw DomainError("phi requires |q| < 1");
  if (at_phi_zero(x, q, cfg)) return {0.0, 0.0};
  return phi_product(x, q, cfg, -1);
}

cplx phi_skip(cplx x, int m, cplx q, const QFunctionConfig& cfg) {
  if (m < 0) throw DomainError("phi_skip requires m >= 0");
  if (std::abs(q) >= 1.0) throw DomainError("phi_skip requires |q| < 1");
  if (at_phi_zero(x, q, cfg, m)) return {0.0, 0.0};
  return phi_product(x, q, cfg, m);
}

cplx phi_circle(cplx x, cplx q, const QFunctionConfig& cfg) {
  if (std::abs(x - 1.0) < cfg.zero_tol) return phi(q, q, cfg);
  return phi(x, q, cfg);
}

cplx theta(cplx z, cplx q, const QFunctionConfig& cfg) {
  if (!(std::abs(z) > 0.0)) throw DomainError("theta requires z != 0");
  return phi(q * z, q, cfg) * phi(cplx(1.0, 0.0) / z, q, cfg);
}

cplx u_kernel(cplx s, cplx z, cplx q, const QFunctionConfig& cfg) {
  const cplx ts = theta(s, q, cfg);
  const cplx tz = theta(z, q, cfg);
  if (ts == cplx(0.0, 0.0) || tz == cplx(0.0, 0.0))
    throw ResonanceError("u_kernel: theta denominator vanishes (argument in q^Z)");
  return theta(s * z, q, cfg) / (ts * tz);
}

cplx phi_virtual(const VirtualCharacter& v, std::span<const cplx> x, const Params& p,
                 const QFunctionConfig& cfg) {
  cplx prod(1.0, 0.0);
  for (const auto& [m, mult] : v.terms) {
    if (mult == 0) continue;
    const cplx w = m.eval(p, x);
    const cplx f = phi(w, p.q, cfg);
    if (mult < 0 && f == cplx(0.0, 0.0)) {
      std::ostringstream os;
      os << "phi_virtual: pole hit at monomial with e_q=" << m.e_q << " e_hs=" << m.e_hs
         << " (argument " << w << ")";
      throw PoleHit(os.str());
    }
    prod *= ipow(f, mult);
  }
  return prod;
}

}  // namespace vxl
