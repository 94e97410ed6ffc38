#pragma once

#include <string>
#include <vector>

#include "vertexlab/util.hpp"

namespace vxl {

// The numeric ambient point.  Everything downstream evaluates at one of
// these; all fields are plain double-precision complex numbers.
//
// Admissibility (checked by validate_params):
//   |q| < |hbar| < |a_j| < 1 for every j,
//   hbar_sqrt^2 == hbar to 1e-14 relative,
//   a_i/a_j away from q^Z * {1, hbar^{+-1}} for i != j,
//   z away from the resonance lattices c_m q^Z, c_m = (-1)^n hbar^{m-n/2}.
struct Params {
  int k = 1;
  int n = 1;
  cplx q{0.0, 0.0};
  cplx hbar{0.0, 0.0};
  cplx hbar_sqrt{0.0, 0.0};  // fixed branch, never recomputed by a root
  std::vector<cplx> a;
  cplx z{0.0, 0.0};

  // finite scan window for the q^Z genericity/resonance checks (heuristic
  // guard, not a proof)
  int genericity_window = 64;

  Params with_z(cplx znew) const {
    Params p = *this;
    p.z = znew;
    return p;
  }

  // c_m = (-1)^n hbar^{m - n/2}, stored via the hbar_sqrt branch.
  cplx resonance_constant(int m) const {
    const cplx c = ipow(hbar_sqrt, 2 * m - n);
    return (n % 2 == 0) ? c : -c;
  }
};

// Returns p unchanged if every invariant holds, otherwise throws DomainError
// naming the first violated inequality or resonance.
Params validate_params(const Params& p);

// Message of the first violation, empty if admissible.
std::string params_violation(const Params& p);

}  // namespace vxl
