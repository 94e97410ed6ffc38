#include "vertexlab/params.hpp"

#include <cmath>
#include <sstream>

#include "vertexlab/errors.hpp"

namespace vxl {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string params_violation(const Params& p) {
  if (p.k < 1 || p.n < 1) return "k and n must be positive";
  if (p.k > p.n) return "k <= n required";
  if (static_cast<int>(p.a.size()) != p.n) return "a must have n entries";

  const double aq = std::abs(p.q);
  const double ah = std::abs(p.hbar);
  if (!(aq > 0.0)) return "q must be nonzero";
  if (!(aq < ah)) return "|q| < |hbar| violated: |q|=" + fmt(aq) + ", |hbar|=" + fmt(ah);
  for (int j = 0; j < p.n; ++j) {
    const double aa = std::abs(p.a[j]);
    if (!(ah < aa))
      return "|hbar| < |a_" + std::to_string(j + 1) + "| violated: |hbar|=" + fmt(ah) +
             ", |a|=" + fmt(aa);
    if (!(aa < 1.0))
      return "|a_" + std::to_string(j + 1) + "| < 1 violated: |a|=" + fmt(aa);
  }

  const cplx hs2 = p.hbar_sqrt * p.hbar_sqrt;
  if (std::abs(hs2 - p.hbar) > 1e-14 * std::abs(p.hbar))
    return "hbar_sqrt^2 != hbar (relative tolerance 1e-14)";

  // genericity of the equivariant ratios
  const double tol = 1e-10;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j) continue;
      const cplx r = p.a[i] / p.a[j];
      if (in_q_lattice(r, p.q, p.genericity_window, tol))
        return "a_" + std::to_string(i + 1) + "/a_" + std::to_string(j + 1) +
               " lies in q^Z (genericity violated)";
      if (in_q_lattice(r / p.hbar, p.q, p.genericity_window, tol) ||
          in_q_lattice(r * p.hbar, p.q, p.genericity_window, tol))
        return "a_" + std::to_string(i + 1) + "/a_" + std::to_string(j + 1) +
               " lies in q^Z hbar^{+-1} (genericity violated)";
    }

  if (!(std::abs(p.z) > 0.0)) return "z must be nonzero";
  for (int m = 1; m <= p.n; ++m) {
    if (in_q_lattice(p.z / p.resonance_constant(m), p.q, p.genericity_window, tol))
      return "z lies on the resonance lattice c_" + std::to_string(m) + " q^Z";
  }
  return {};
}

Params validate_params(const Params& p) {
  const std::string msg = params_violation(p);
  if (!msg.empty()) throw DomainError(msg);
  return p;
}

}  // namespace vxl
