#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "vertexlab/params.hpp"
#include "vertexlab/util.hpp"

namespace vxl {

// Laurent monomial in (q, hbar^{1/2}, a_1..a_n, x_1..x_k).  Half-integer hbar
// exponents are stored as integer exponents of hbar^{1/2} (e_hs).
struct Monomial {
  int e_q = 0;
  int e_hs = 0;
  std::vector<int> e_a;
  std::vector<int> e_x;

  static Monomial unit(int k, int n) {
    Monomial m;
    m.e_a.assign(static_cast<std::size_t>(n), 0);
    m.e_x.assign(static_cast<std::size_t>(k), 0);
    return m;
  }

  cplx eval(const Params& p, std::span<const cplx> x) const {
    cplx v = ipow(p.q, e_q) * ipow(p.hbar_sqrt, e_hs);
    for (std::size_t j = 0; j < e_a.size(); ++j)
      if (e_a[j] != 0) v *= ipow(p.a[j], e_a[j]);
    for (std::size_t i = 0; i < e_x.size(); ++i)
      if (e_x[i] != 0) v *= ipow(x[i], e_x[i]);
    return v;
  }

  Monomial inverse() const {
    Monomial m = *this;
    m.e_q = -m.e_q;
    m.e_hs = -m.e_hs;
    for (auto& e : m.e_a) e = -e;
    for (auto& e : m.e_x) e = -e;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m = *this;
    m.e_q += o.e_q;
    m.e_hs += o.e_hs;
    for (std::size_t j = 0; j < m.e_a.size(); ++j) m.e_a[j] += o.e_a[j];
    for (std::size_t i = 0; i < m.e_x.size(); ++i) m.e_x[i] += o.e_x[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::tie(a.e_q, a.e_hs, a.e_a, a.e_x) < std::tie(b.e_q, b.e_hs, b.e_a, b.e_x);
  }
};

// Signed multiset of monomials; canonical form merges equal monomials and
// drops zero multiplicities.
struct VirtualCharacter {
  std::vector<std::pair<Monomial, int>> terms;

  VirtualCharacter& append(Monomial m, int mult) {
    terms.emplace_back(std::move(m), mult);
    return *this;
  }

  void canonicalize();

  VirtualCharacter dual() const;            // every monomial w -> w^{-1}
  VirtualCharacter negated() const;         // multiplicities flipped
  VirtualCharacter shifted_q(int e) const;  // every monomial times q^e
  long total_multiplicity() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
};

// Torus-fixed point of T*Gr(k,n): strictly increasing k-subset of 1..n.
struct FixedPoint {
  std::vector<int> mu;  // 1-based

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend bool operator<(const FixedPoint& a, const FixedPoint& b) { return a.mu < b.mu; }
};

bool fixed_point_valid(const FixedPoint& fp, int k, int n);
std::vector<FixedPoint> all_fixed_points(int k, int n);  // lexicographic

enum class Chamber { plus, minus };

inline const char* chamber_name(Chamber c) { return c == Chamber::plus ? "plus" : "minus"; }

// doubled half-sum of positive roots, (k-1, k-3, ..., 1-k)
std::vector<int> weyl_two_rho(int k);

struct WeylVector {
  std::vector<int> two_rho;

  static WeylVector of_rank(int k) { return WeylVector{weyl_two_rho(k)}; }
  bool valid() const {
    long sum = 0;
    for (std::size_t i = 0; i < two_rho.size(); ++i) {
      sum += two_rho[i];
      if (i > 0 && two_rho[i] != two_rho[i - 1] - 2) return false;
    }
    return sum == 0;
  }
};

// T X - g + gg = sum x_i/a_j + sum a_j/(hbar x_i) - sum x_i/x_j + hbar sum x_i/x_j
VirtualCharacter tangent_character(int k, int n);

// T^{1/2} X = Hom(W, V) = sum x_i/a_j
VirtualCharacter polarization_character(int k, int n);

// ||(xi, alpha)||^2 = sum_{i,j} (xi_i - alpha_j)^2
long polarization_form(std::span<const int> xi, std::span<const int> alpha);

// sigma_l^vee = x_l^n prod_j a_j^{-1}
Monomial sigma_dual(int l, const Params& p);

// c_sigma for sigma = sigma_l, computed through the polarization character:
// beta_1 = <sigma, det T^{1/2}>, beta_2 = (sigma,sigma)_{T^{1/2}} / 2, and
// c_sigma^{-1} = q^{beta_2} (hbar^{1/2} q^{1/2})^{beta_1} sigma^vee(x).
// The q-exponent beta_2 + beta_1/2 is an integer here, so no root is taken.
cplx c_sigma(int l, const Params& p, std::span<const cplx> x);

}  // namespace vxl
