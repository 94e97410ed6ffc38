#pragma once

#include <cstdint>
#include <span>

#include "vertexlab/chars.hpp"
#include "vertexlab/params.hpp"
#include "vertexlab/qseries.hpp"

namespace vxl {

struct StabSpec {
  FixedPoint mu;
  Chamber chamber = Chamber::plus;
  Params p;
};

// throws DomainError unless mu is valid for (k, n) and the params are
// admissible
void validate_spec(const StabSpec& s);

// One theta building block.
//   plus:  f_m(x,w)  = theta(c_m x w^{-1}/a_m)/theta(c_m w^{-1})
//                      * prod_{i<m} theta(x/a_i) * prod_{i>m} theta(hbar x/a_i),
//          c_m = (-1)^n hbar^{m-n/2}.
//   minus: mirrored block with w in place of w^{-1}, the index products
//          swapped, and c_m = (-1)^n hbar^{(n+1-m)-n/2}.
// Raises ResonanceError when the denominator theta vanishes.
cplx f_building_block(int m, cplx x, cplx z_eff, const Params& p,
                      Chamber chamber = Chamber::plus);

// Symmetric envelope: the k!-term sum over permutations tau of
//   prefactor(tau) * prod_i f_{mu_{tau(i)}}(x_i, z hbar^{-2 rho_{tau(i)}}),
// where 2rho_r = k+1-2r and the prefactor pairs theta(hbar x_i/x_j)/theta(x_i/x_j)
// over tau(i) > tau(j) for the plus chamber and tau(i) < tau(j) for the minus
// one.  Terms are summed in lexicographic tau order with compensated
// accumulation, so the value is reproducible bit for bit.
cplx stab_envelope(const StabSpec& s, std::span<const cplx> x);

// single permutation term; tau is 1-based and must be a permutation of 1..k
cplx stab_envelope_term(const StabSpec& s, std::span<const cplx> x, std::span<const int> tau);

// envelope evaluated at x_i = a_{nu_i}
cplx stab_restrict(const StabSpec& s, const FixedPoint& nu);

// Monomial F with envelope(x, qz) = F(x) envelope(x, z):
// prod_i x_i / prod_j a_{mu_j} for the plus chamber, its inverse for minus.
Monomial z_quasi_periodicity_factor(const StabSpec& s);

// min over i<j of the distance from x_i/x_j to the lattice q^Z
double near_diagonal_distance(std::span<const cplx> x, const Params& p);

struct WheelReport {
  double max_on_locus = 0.0;  // max |envelope| over sampled wheel points
  double scale = 0.0;         // max |envelope| just off the locus
};

// Samples x_1 = a_l q^{m1}, x_2 = a_l hbar^{-1} q^{m2} (m in {-1,0,1}),
// remaining coordinates random, and reports the maximal envelope modulus.
WheelReport wheel_check(const StabSpec& s, int l, int samples, std::uint64_t seed);

}  // namespace vxl
