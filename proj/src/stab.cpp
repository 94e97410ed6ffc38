#include "vertexlab/stab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vertexlab/errors.hpp"
#include "vertexlab/reduction.hpp"
#include "vertexlab/rng.hpp"

namespace vxl {

void validate_spec(const StabSpec& s) {
  validate_params(s.p);
  if (!fixed_point_valid(s.mu, s.p.k, s.p.n))
    throw DomainError("mu is not a strictly increasing k-subset of 1..n");
  if (s.p.k > 6) throw DomainError("envelope symmetrization supports k <= 6");
}

cplx f_building_block(int m, cplx x, cplx z_eff, const Params& p, Chamber chamber) {
  if (m < 1 || m > p.n) throw DomainError("f_building_block: m out of range");
  const cplx am = p.a[static_cast<std::size_t>(m - 1)];
  cplx num, den;
  if (chamber == Chamber::plus) {
    const cplx cm = p.resonance_constant(m);
    num = theta(cm * x / (z_eff * am), p);
    den = theta(cm / z_eff, p);
  } else {
    const cplx cm = p.resonance_constant(p.n + 1 - m);
    num = theta(cm * x * z_eff / am, p);
    den = theta(cm * z_eff, p);
  }
  if (den == cplx(0.0, 0.0))
    throw ResonanceError("f_building_block: resonant Kahler argument (theta denominator in q^Z)");
  cplx val = num / den;
  for (int i = 1; i <= p.n; ++i) {
    if (i == m) continue;
    const cplx ai = p.a[static_cast<std::size_t>(i - 1)];
    const bool lower = (i < m);
    // plus chamber: plain theta below m, hbar-shifted above; minus: swapped
    const bool plain = (chamber == Chamber::plus) ? lower : !lower;
    val *= plain ? theta(x / ai, p) : theta(p.hbar * x / ai, p);
  }
  return val;
}

namespace {

cplx envelope_term(const StabSpec& s, std::span<const cplx> x, std::span<const int> tau) {
  const Params& p = s.p;
  const int k = p.k;
  cplx term(1.0, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool oriented = (s.chamber == Chamber::plus)
                                ? tau[static_cast<std::size_t>(i)] > tau[static_cast<std::size_t>(j)]
                                : tau[static_cast<std::size_t>(i)] < tau[static_cast<std::size_t>(j)];
      if (!oriented) continue;
      const cplx r = x[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(j)];
      const cplx den = theta(r, p);
      if (den == cplx(0.0, 0.0))
        throw ResonanceError("envelope term: x_i/x_j lies in q^Z");
      term *= theta(p.hbar * r, p) / den;
    }
  for (int i = 0; i < k; ++i) {
    const int rank = tau[static_cast<std::size_t>(i)];
    const int two_rho = k + 1 - 2 * rank;
    const cplx z_eff = p.z * ipow(p.hbar_sqrt, -2 * two_rho);
    const int label = s.mu.mu[static_cast<std::size_t>(rank - 1)];
    term *= f_building_block(label, x[static_cast<std::size_t>(i)], z_eff, p, s.chamber);
  }
  return term;
}

}  // namespace

cplx stab_envelope_term(const StabSpec& s, std::span<const cplx> x, std::span<const int> tau) {
  validate_spec(s);
  return envelope_term(s, x, tau);
}

cplx stab_envelope(const StabSpec& s, std::span<const cplx> x) {
  validate_spec(s);
  if (static_cast<int>(x.size()) != s.p.k) throw DomainError("x must have k entries");
  std::vector<int> tau(static_cast<std::size_t>(s.p.k));
  std::iota(tau.begin(), tau.end(), 1);
  ComplexSum sum;
  do {
    sum.add(envelope_term(s, x, tau));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return sum.value();
}

cplx stab_restrict(const StabSpec& s, const FixedPoint& nu) {
  validate_spec(s);
  if (!fixed_point_valid(nu, s.p.k, s.p.n))
    throw DomainError("nu is not a strictly increasing k-subset of 1..n");
  std::vector<cplx> x(static_cast<std::size_t>(s.p.k));
  for (int i = 0; i < s.p.k; ++i)
    x[static_cast<std::size_t>(i)] = s.p.a[static_cast<std::size_t>(nu.mu[static_cast<std::size_t>(i)] - 1)];
  return stab_envelope(s, x);
}

Monomial z_quasi_periodicity_factor(const StabSpec& s) {
  Monomial f = Monomial::unit(s.p.k, s.p.n);
  for (auto& e : f.e_x) e = 1;
  for (int label : s.mu.mu) f.e_a[static_cast<std::size_t>(label - 1)] -= 1;
  return s.chamber == Chamber::plus ? f : f.inverse();
}

double near_diagonal_distance(std::span<const cplx> x, const Params& p) {
  double dist = 1e300;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      const cplx r = x[i] / x[j];
      // distance to the nearest q^m, |m| <= window
      const double guess = std::log(std::abs(r)) / std::log(std::abs(p.q));
      const int m0 = static_cast<int>(std::lround(guess));
      for (int m = m0 - 1; m <= m0 + 1; ++m) {
        if (m < -p.genericity_window || m > p.genericity_window) continue;
        dist = std::min(dist, std::abs(r - ipow(p.q, m)));
      }
    }
  return dist;
}

WheelReport wheel_check(const StabSpec& s, int l, int samples, std::uint64_t seed) {
  validate_spec(s);
  const Params& p = s.p;
  if (p.k < 2) throw DomainError("wheel_check needs k >= 2");
  if (l < 1 || l > p.n) throw DomainError("wheel_check: l out of range");
  Rng rng(seed);
  const cplx al = p.a[static_cast<std::size_t>(l - 1)];
  WheelReport rep;
  for (int t = 0; t < samples; ++t) {
    const int m1 = static_cast<int>(rng.next() % 3) - 1;
    const int m2 = static_cast<int>(rng.next() % 3) - 1;
    std::vector<cplx> x(static_cast<std::size_t>(p.k));
    x[0] = al * ipow(p.q, m1);
    x[1] = al / p.hbar * ipow(p.q, m2);
    for (int i = 2; i < p.k; ++i) x[static_cast<std::size_t>(i)] = rng.in_annulus(0.8, 1.2);
    rep.max_on_locus = std::max(rep.max_on_locus, std::abs(stab_envelope(s, x)));
    // step both coordinates off every a-lattice to measure the ambient size
    x[0] *= 1.37;
    x[1] *= 1.62;
    rep.scale = std::max(rep.scale, std::abs(stab_envelope(s, x)));
  }
  return rep;
}

}  // namespace vxl
