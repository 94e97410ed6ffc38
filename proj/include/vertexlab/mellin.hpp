#pragma once

#include <span>
#include <vector>

#include "vertexlab/chars.hpp"
#include "vertexlab/params.hpp"
#include "vertexlab/stab.hpp"

namespace vxl {

// Symmetric Laurent polynomial in x_1..x_k whose coefficients are Laurent
// monomials in (q, hbar^{1/2}, a); the test insertion paired against the
// envelope inside the vertex integral.
struct Descendent {
  std::vector<std::pair<Monomial, cplx>> terms;

  cplx eval(const Params& p, std::span<const cplx> x) const;
  void canonicalize();
  bool is_symmetric() const;  // invariant under permuting the x-exponent slots

  static Descendent one(int k, int n);
  static Descendent elementary1(int k, int n);          // e_1 = sum x_i
  static Descendent elementary1_squared(int k, int n);  // e_1^2 expanded
  static Descendent zero(int k, int n);

  // "1", "e1", "e1^2"
  static Descendent named(const std::string& name, int k, int n);
};

// One coordinate of a torus-fixed pole configuration.  level 1 is the plain
// a_l tower; level v >= 2 are the hbar-shifted continuations that only matter
// for the vanishing report.  Chamber plus puts the pole at
// q^{d} hbar^{1-level} a_l, chamber minus at q^{-d} hbar^{level-2} a_l.
struct PolePoint {
  int label = 1;   // 1..n
  int level = 1;   // 1..k
  int degree = 0;  // >= 0

  friend bool operator==(const PolePoint&, const PolePoint&) = default;
  friend auto operator<=>(const PolePoint&, const PolePoint&) = default;
};

struct PoleAssignment {
  std::vector<PolePoint> points;  // sorted by (label, level)

  int total_degree() const;
  bool simple_towers() const;  // all levels == 1
  cplx coordinate(int slot, const Params& p, Chamber chamber) const;

  friend bool operator==(const PoleAssignment&, const PoleAssignment&) = default;
};

// All pole configurations with total degree <= max_total_degree.  Without
// include_towers only distinct-label level-1 assignments are produced; with
// it, multi-level towers (strictly increasing degrees within a tower) are
// included as well.  Output is canonically sorted.
std::vector<PoleAssignment> enumerate_poles(const Params& p, int max_total_degree,
                                            bool include_towers = false);

// Gamma' = phi(-q (TX - g + gg)^vee), assembled through phi_virtual
cplx gamma_prime(std::span<const cplx> x, const Params& p);
// the same function written out as the explicit double product
cplx gamma_prime_product(std::span<const cplx> x, const Params& p);

// Gamma = phi(-q T^vee X + q g^vee - gg^vee)
cplx gamma_infty(std::span<const cplx> x, const Params& p);
cplx gamma_infty_product(std::span<const cplx> x, const Params& p);

// Phi = prod_{i,j} 1/(phi(a_j/x_i) phi(hbar x_i/a_j))
//       * prod_{i,j<=k} phi_circle(x_j/x_i)/phi(q x_j/(hbar x_i))
cplx big_phi(std::span<const cplx> x, const Params& p);

// rho(x) * envelope(x) * Phi(x); the 1/k! and the torus measure live in the
// integration and residue drivers
cplx integrand(const Descendent& rho, const StabSpec& s, std::span<const cplx> x);

// Iterated residue at the pole configuration: the integrand with each pole's
// vanishing phi factor replaced by phi_skip, evaluated at the pole point.  No
// extra Jacobian: the dx/(2 pi i x) measure cancels against the derivative of
// factors of the shape (1 - q^d a/x).
cplx residue_at(const Descendent& rho, const StabSpec& s, const PoleAssignment& pa);

// Per-total-degree contributions of the residue expansion at fixed z.
struct DegreeLedger {
  std::vector<cplx> contributions;  // index = total degree
  cplx z_point{0.0, 0.0};
  int truncation = 0;
  bool convergence_warning = false;

  cplx total() const;
  double decay_ratio() const;  // max |c_{d+1}| / |c_d| over nonzero entries
};

// Residue expansion over the simple-tower lattice up to total degree D.
// Convergence neighborhood: |z| <= z_max for the plus chamber, |1/z| <= z_max
// for the minus one.
DegreeLedger vertex_series(const Descendent& rho, const StabSpec& s, int D,
                           double z_max = 0.05);
DegreeLedger vertex_series_serial(const Descendent& rho, const StabSpec& s, int D,
                                  double z_max = 0.05);

// Product trapezoidal rule for (1/k!) int_{|x_i|=1} rho env Phi prod dx_i/(2 pi i x_i)
// with per-variable phase offsets 2 pi i/(7k); exponentially convergent in N.
cplx quadrature_oracle(const Descendent& rho, const StabSpec& s, int N);
cplx quadrature_oracle_serial(const Descendent& rho, const StabSpec& s, int N);
// shares the rho-independent grid weights env*Phi across several insertions
std::vector<cplx> quadrature_oracle_batch(std::span<const Descendent> rhos, const StabSpec& s,
                                          int N);

// min modulus over the grid of every denominator phi factor inside Phi
double contour_min_denominator(const StabSpec& s, int N);

}  // namespace vxl
