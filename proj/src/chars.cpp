#include "vertexlab/chars.hpp"

#include <algorithm>

#include "vertexlab/errors.hpp"

namespace vxl {

void VirtualCharacter::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Monomial, int>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const auto& t) { return t.second == 0; });
  terms = std::move(merged);
}

VirtualCharacter VirtualCharacter::dual() const {
  VirtualCharacter v;
  for (const auto& [m, mult] : terms) v.append(m.inverse(), mult);
  return v;
}

VirtualCharacter VirtualCharacter::negated() const {
  VirtualCharacter v;
  for (const auto& [m, mult] : terms) v.append(m, -mult);
  return v;
}

VirtualCharacter VirtualCharacter::shifted_q(int e) const {
  VirtualCharacter v = *this;
  for (auto& [m, mult] : v.terms) m.e_q += e;
  return v;
}

long VirtualCharacter::total_multiplicity() const {
  long s = 0;
  for (const auto& [m, mult] : terms) s += mult;
  return s;
}

bool fixed_point_valid(const FixedPoint& fp, int k, int n) {
  if (static_cast<int>(fp.mu.size()) != k) return false;
  int prev = 0;
  for (int v : fp.mu) {
    if (v <= prev || v > n) return false;
    prev = v;
  }
  return true;
}

std::vector<FixedPoint> all_fixed_points(int k, int n) {
  std::vector<FixedPoint> out;
  std::vector<int> mu(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) mu[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(FixedPoint{mu});
    int i = k - 1;
    while (i >= 0 && mu[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++mu[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      mu[static_cast<std::size_t>(j)] = mu[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<int> weyl_two_rho(int k) {
  std::vector<int> r(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) r[static_cast<std::size_t>(i - 1)] = k + 1 - 2 * i;
  return r;
}

VirtualCharacter tangent_character(int k, int n) {
  VirtualCharacter v;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial m = Monomial::unit(k, n);  // x_i / a_j
      m.e_x[static_cast<std::size_t>(i)] = 1;
      m.e_a[static_cast<std::size_t>(j)] = -1;
      v.append(m, 1);
      Monomial w = Monomial::unit(k, n);  // a_j / (hbar x_i)
      w.e_a[static_cast<std::size_t>(j)] = 1;
      w.e_x[static_cast<std::size_t>(i)] = -1;
      w.e_hs = -2;
      v.append(w, 1);
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Monomial m = Monomial::unit(k, n);  // x_i / x_j
      m.e_x[static_cast<std::size_t>(i)] += 1;
      m.e_x[static_cast<std::size_t>(j)] -= 1;
      v.append(m, -1);
      Monomial w = m;  // hbar x_i / x_j
      w.e_hs = 2;
      v.append(w, 1);
    }
  return v;
}

VirtualCharacter polarization_character(int k, int n) {
  VirtualCharacter v;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial m = Monomial::unit(k, n);
      m.e_x[static_cast<std::size_t>(i)] = 1;
      m.e_a[static_cast<std::size_t>(j)] = -1;
      v.append(m, 1);
    }
  return v;
}

long polarization_form(std::span<const int> xi, std::span<const int> alpha) {
  long s = 0;
  for (int xv : xi)
    for (int av : alpha) {
      const long d = xv - av;
      s += d * d;
    }
  return s;
}

Monomial sigma_dual(int l, const Params& p) {
  if (l < 1 || l > p.k) throw DomainError("sigma_dual: l out of range");
  Monomial m = Monomial::unit(p.k, p.n);
  m.e_x[static_cast<std::size_t>(l - 1)] = p.n;
  for (auto& e : m.e_a) e = -1;
  return m;
}

cplx c_sigma(int l, const Params& p, std::span<const cplx> x) {
  if (l < 1 || l > p.k) throw DomainError("c_sigma: l out of range");
  const VirtualCharacter pol = polarization_character(p.k, p.n);
  long beta1 = 0;
  long two_beta2 = 0;
  Monomial sv = Monomial::unit(p.k, p.n);
  for (const auto& [m, mult] : pol.terms) {
    const long pairing = m.e_x[static_cast<std::size_t>(l - 1)];
    if (pairing == 0) continue;
    beta1 += mult * pairing;
    two_beta2 += mult * pairing * pairing;
    for (long r = 0; r < mult * pairing; ++r) sv = sv * m;
  }
  const long q_exp_doubled = two_beta2 + beta1;
  if (q_exp_doubled % 2 != 0)
    throw DomainError("c_sigma: q-exponent is not integral for this coweight");
  const cplx c_inv = ipow(p.q, q_exp_doubled / 2) * ipow(p.hbar_sqrt, beta1) * sv.eval(p, x);
  return cplx(1.0, 0.0) / c_inv;
}

}  // namespace vxl
