#include "vertexlab/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vertexlab/errors.hpp"
#include "vertexlab/qseries.hpp"
#include "vertexlab/reduction.hpp"

namespace vxl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

// ---------------------------------------------------------------- Descendent

cplx Descendent::eval(const Params& p, std::span<const cplx> x) const {
  cplx s(0.0, 0.0);
  for (const auto& [m, c] : terms) s += c * m.eval(p, x);
  return s;
}

void Descendent::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Monomial, cplx>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const auto& t) { return t.second == cplx(0.0, 0.0); });
  terms = std::move(merged);
}

bool Descendent::is_symmetric() const {
  Descendent base = *this;
  base.canonicalize();
  const std::size_t k = base.terms.empty() ? 0 : base.terms.front().first.e_x.size();
  for (std::size_t t = 0; t + 1 < k; ++t) {
    Descendent swapped = base;
    for (auto& [m, c] : swapped.terms) std::swap(m.e_x[t], m.e_x[t + 1]);
    swapped.canonicalize();
    if (swapped.terms.size() != base.terms.size()) return false;
    for (std::size_t i = 0; i < base.terms.size(); ++i) {
      if (!(swapped.terms[i].first == base.terms[i].first)) return false;
      if (std::abs(swapped.terms[i].second - base.terms[i].second) >
          1e-12 * (1.0 + std::abs(base.terms[i].second)))
        return false;
    }
  }
  return true;
}

Descendent Descendent::zero(int, int) { return Descendent{}; }

Descendent Descendent::one(int k, int n) {
  Descendent d;
  d.terms.emplace_back(Monomial::unit(k, n), cplx(1.0, 0.0));
  return d;
}

Descendent Descendent::elementary1(int k, int n) {
  Descendent d;
  for (int i = 0; i < k; ++i) {
    Monomial m = Monomial::unit(k, n);
    m.e_x[static_cast<std::size_t>(i)] = 1;
    d.terms.emplace_back(std::move(m), cplx(1.0, 0.0));
  }
  return d;
}

Descendent Descendent::elementary1_squared(int k, int n) {
  Descendent d;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Monomial m = Monomial::unit(k, n);
      m.e_x[static_cast<std::size_t>(i)] += 1;
      m.e_x[static_cast<std::size_t>(j)] += 1;
      d.terms.emplace_back(std::move(m), cplx(1.0, 0.0));
    }
  d.canonicalize();
  return d;
}

Descendent Descendent::named(const std::string& name, int k, int n) {
  if (name == "1") return one(k, n);
  if (name == "e1") return elementary1(k, n);
  if (name == "e1^2" || name == "e1sq") return elementary1_squared(k, n);
  if (name == "0") return zero(k, n);
  throw DomainError("unknown descendent insertion '" + name + "' (use 1, e1, e1^2)");
}

// -------------------------------------------------------------- pole lattice

int PoleAssignment::total_degree() const {
  int s = 0;
  for (const auto& pt : points) s += pt.degree;
  return s;
}

bool PoleAssignment::simple_towers() const {
  for (const auto& pt : points)
    if (pt.level != 1) return false;
  return true;
}

cplx PoleAssignment::coordinate(int slot, const Params& p, Chamber chamber) const {
  const PolePoint& pt = points[static_cast<std::size_t>(slot)];
  const cplx al = p.a[static_cast<std::size_t>(pt.label - 1)];
  if (chamber == Chamber::plus)
    return ipow(p.q, pt.degree) * ipow(p.hbar_sqrt, 2 * (1 - pt.level)) * al;
  return ipow(p.q, -pt.degree) * ipow(p.hbar_sqrt, 2 * (pt.level - 2)) * al;
}

namespace {

// degree tuples 0 <= d_1 < ... < d_len with sum <= budget
void degree_tuples(int len, int budget, int min_next, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int remaining = len - static_cast<int>(cur.size());
  for (int d = min_next; ; ++d) {
    // the remaining slots need at least d+1, d+2, ... on top of d
    int min_tail = 0;
    for (int r = 1; r < remaining; ++r) min_tail += d + r;
    if (d + min_tail > budget) break;
    cur.push_back(d);
    degree_tuples(len, budget - d, d + 1, cur, out);
    cur.pop_back();
  }
}

void enumerate_rec(const Params& p, int label, int slots_left, int budget, bool towers,
                   std::vector<PolePoint>& cur, std::vector<PoleAssignment>& out) {
  if (slots_left == 0) {
    out.push_back(PoleAssignment{cur});
    return;
  }
  if (label > p.n) return;
  // remaining labels must be able to absorb the remaining slots
  const int max_height = towers ? slots_left : 1;
  for (int v = 0; v <= max_height; ++v) {
    if (v == 0) {
      enumerate_rec(p, label + 1, slots_left, budget, towers, cur, out);
      continue;
    }
    std::vector<std::vector<int>> tuples;
    std::vector<int> scratch;
    degree_tuples(v, budget, 0, scratch, tuples);
    for (const auto& tup : tuples) {
      int used = 0;
      for (int lvl = 1; lvl <= v; ++lvl) {
        cur.push_back(PolePoint{label, lvl, tup[static_cast<std::size_t>(lvl - 1)]});
        used += tup[static_cast<std::size_t>(lvl - 1)];
      }
      enumerate_rec(p, label + 1, slots_left - v, budget - used, towers, cur, out);
      for (int lvl = 0; lvl < v; ++lvl) cur.pop_back();
    }
  }
}

}  // namespace

std::vector<PoleAssignment> enumerate_poles(const Params& p, int max_total_degree,
                                            bool include_towers) {
  if (max_total_degree < 0) throw DomainError("enumerate_poles: negative degree bound");
  std::vector<PoleAssignment> out;
  std::vector<PolePoint> cur;
  enumerate_rec(p, 1, p.k, max_total_degree, include_towers, cur, out);
  std::sort(out.begin(), out.end(),
            [](const PoleAssignment& a, const PoleAssignment& b) { return a.points < b.points; });
  return out;
}

// ----------------------------------------------------------- q-Gamma factors

cplx gamma_prime(std::span<const cplx> x, const Params& p) {
  const VirtualCharacter arg = tangent_character(p.k, p.n).dual().shifted_q(1).negated();
  return phi_virtual(arg, x, p);
}

cplx gamma_prime_product(std::span<const cplx> x, const Params& p) {
  cplx v(1.0, 0.0);
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.n; ++j) {
      const cplx aj = p.a[static_cast<std::size_t>(j)];
      const cplx xi = x[static_cast<std::size_t>(i)];
      v /= phi(p.q * aj / xi, p) * phi(p.q * p.hbar * xi / aj, p);
    }
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.k; ++j) {
      const cplx r = x[static_cast<std::size_t>(j)] / x[static_cast<std::size_t>(i)];
      v *= phi(p.q * r, p) / phi(p.q * r / p.hbar, p);
    }
  return v;
}

cplx gamma_infty(std::span<const cplx> x, const Params& p) {
  const int k = p.k;
  const int n = p.n;
  VirtualCharacter tx;  // Hom(W,V) + hbar^{-1} Hom(V,W)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      Monomial m = Monomial::unit(k, n);
      m.e_x[static_cast<std::size_t>(i)] = 1;
      m.e_a[static_cast<std::size_t>(j)] = -1;
      tx.append(m, 1);
      Monomial w = Monomial::unit(k, n);
      w.e_a[static_cast<std::size_t>(j)] = 1;
      w.e_x[static_cast<std::size_t>(i)] = -1;
      w.e_hs = -2;
      tx.append(w, 1);
    }
  VirtualCharacter gl;  // End(V)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Monomial m = Monomial::unit(k, n);
      m.e_x[static_cast<std::size_t>(i)] += 1;
      m.e_x[static_cast<std::size_t>(j)] -= 1;
      gl.append(m, 1);
    }
  VirtualCharacter gg = gl;  // hbar End(V)
  for (auto& [m, mult] : gg.terms) m.e_hs += 2;

  VirtualCharacter arg = tx.dual().shifted_q(1).negated();
  arg += gl.dual().shifted_q(1);
  arg += gg.dual().negated();
  arg.canonicalize();
  return phi_virtual(arg, x, p);
}

cplx gamma_infty_product(std::span<const cplx> x, const Params& p) {
  cplx v(1.0, 0.0);
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.n; ++j) {
      const cplx aj = p.a[static_cast<std::size_t>(j)];
      const cplx xi = x[static_cast<std::size_t>(i)];
      v /= phi(p.q * aj / xi, p) * phi(p.q * p.hbar * xi / aj, p);
    }
  for (int i = 0; i < p.k; ++i)
    for (int j = 0; j < p.k; ++j) {
      const cplx r = x[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(j)];
      v *= phi(p.q * r, p) / phi(r / p.hbar, p);
    }
  return v;
}

namespace {

// phi-factor replacements for residue evaluation
struct SkipPlan {
  std::vector<int> a_skip;                     // per slot, -1 = none
  std::vector<int> a_label;                    // per slot, 1-based a index of its pole
  std::map<std::pair<int, int>, int> xi_skip;  // (i, j) -> skip on phi(q x_j / (hbar x_i))
};

cplx big_phi_impl(std::span<const cplx> x, const Params& p, const SkipPlan* plan,
                  Chamber chamber) {
  const int k = static_cast<int>(x.size());
  cplx v(1.0, 0.0);
  for (int i = 0; i < k; ++i) {
    const cplx xi = x[static_cast<std::size_t>(i)];
    const int skip_deg =
        (plan && plan->a_skip[static_cast<std::size_t>(i)] >= 0)
            ? plan->a_skip[static_cast<std::size_t>(i)]
            : -1;
    for (int j = 0; j < p.n; ++j) {
      const cplx aj = p.a[static_cast<std::size_t>(j)];
      cplx fa = phi(aj / xi, p);
      cplx fb = phi(p.hbar * xi / aj, p);
      if (skip_deg >= 0 && plan->a_label[static_cast<std::size_t>(i)] == j + 1) {
        if (chamber == Chamber::plus)
          fa = phi_skip(aj / xi, skip_deg, p.q);
        else
          fb = phi_skip(p.hbar * xi / aj, skip_deg, p.q);
      }
      if (fa == cplx(0.0, 0.0) || fb == cplx(0.0, 0.0))
        throw PoleHit("Phi: equivariant phi factor vanishes at the evaluation point");
      v /= fa * fb;
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const cplx r = x[static_cast<std::size_t>(j)] / x[static_cast<std::size_t>(i)];
      const cplx num = phi_circle(r, p.q);
      cplx den;
      int skip = -1;
      if (plan) {
        auto it = plan->xi_skip.find({i, j});
        if (it != plan->xi_skip.end()) skip = it->second;
      }
      const cplx arg = p.q * r / p.hbar;
      den = (skip >= 0) ? phi_skip(arg, skip, p.q) : phi(arg, p);
      if (den == cplx(0.0, 0.0))
        throw PoleHit("Phi: gauge phi factor vanishes at the evaluation point");
      v *= num / den;
    }
  return v;
}

}  // namespace

cplx big_phi(std::span<const cplx> x, const Params& p) {
  return big_phi_impl(x, p, nullptr, Chamber::plus);
}

namespace {

// The spec carries the Kahler variable in the convention of the plus-side
// origin; the mirrored envelope lives in the reciprocal coordinate, so the
// integration and residue drivers hand it 1/z.  The restriction matrices do
// the same.
StabSpec integration_spec(const StabSpec& s) {
  if (s.chamber == Chamber::plus) return s;
  StabSpec out = s;
  out.p = s.p.with_z(cplx(1.0, 0.0) / s.p.z);
  return out;
}

}  // namespace

cplx integrand(const Descendent& rho, const StabSpec& s_in, std::span<const cplx> x) {
  const StabSpec s = integration_spec(s_in);
  return rho.eval(s.p, x) * stab_envelope(s, x) * big_phi(x, s.p);
}

cplx residue_at(const Descendent& rho, const StabSpec& s_in, const PoleAssignment& pa) {
  const StabSpec s = integration_spec(s_in);
  validate_spec(s);
  const Params& p = s.p;
  const int k = p.k;
  if (static_cast<int>(pa.points.size()) != k)
    throw DomainError("pole assignment must have k points");

  std::vector<cplx> x(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(i)] = pa.coordinate(i, p, s.chamber);

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double scale =
          std::max(std::abs(x[static_cast<std::size_t>(i)]), std::abs(x[static_cast<std::size_t>(j)]));
      if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) < 1e-10 * scale)
        throw NonSimplePole("pole coordinates collide; residue is not simple");
    }

  SkipPlan plan;
  plan.a_skip.assign(static_cast<std::size_t>(k), -1);
  plan.a_label.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    const PolePoint& pt = pa.points[static_cast<std::size_t>(i)];
    plan.a_label[static_cast<std::size_t>(i)] = pt.label;
    if (pt.level == 1) {
      plan.a_skip[static_cast<std::size_t>(i)] = pt.degree;
    } else {
      // pole factor sits in the gauge block, between consecutive tower levels
      int prev = -1;
      for (int j = 0; j < k; ++j) {
        const PolePoint& pj = pa.points[static_cast<std::size_t>(j)];
        if (pj.label == pt.label && pj.level == pt.level - 1) prev = j;
      }
      if (prev < 0) throw DomainError("tower levels must be contiguous within a label");
      const int gap = pt.degree - pa.points[static_cast<std::size_t>(prev)].degree - 1;
      if (gap < 0) throw DomainError("tower degrees must increase strictly");
      // plus: phi(q x_prev/(hbar x_cur)) vanishes -> pair (i=cur, j=prev);
      // minus: phi(q x_cur/(hbar x_prev)) vanishes -> pair (i=prev, j=cur)
      if (s.chamber == Chamber::plus)
        plan.xi_skip[{i, prev}] = gap;
      else
        plan.xi_skip[{prev, i}] = gap;
    }
  }

  const cplx env = stab_envelope(s, x);
  const cplx phi_part = big_phi_impl(x, p, &plan, s.chamber);
  return rho.eval(p, x) * env * phi_part;
}

// ------------------------------------------------------------ vertex series

cplx DegreeLedger::total() const {
  ComplexSum s;
  for (const auto& c : contributions) s.add(c);
  return s.value();
}

double DegreeLedger::decay_ratio() const {
  double worst = 0.0;
  for (std::size_t d = 0; d + 1 < contributions.size(); ++d) {
    const double lo = std::abs(contributions[d]);
    const double hi = std::abs(contributions[d + 1]);
    if (lo > 0.0) worst = std::max(worst, hi / lo);
  }
  return worst;
}

namespace {

DegreeLedger vertex_series_impl(const Descendent& rho, const StabSpec& s, int D, double z_max,
                                bool parallel) {
  validate_spec(s);
  if (D < 0 || D > 12) throw DomainError("vertex series: D must lie in 0..12");
  const double zmag = (s.chamber == Chamber::plus) ? std::abs(s.p.z) : 1.0 / std::abs(s.p.z);
  if (zmag > z_max)
    throw DomainError("vertex series: Kahler variable outside the convergence neighborhood "
                      "(|z| or |1/z| exceeds z_max)");
  if (!rho.is_symmetric()) throw DomainError("descendent insertion must be symmetric");

  const auto assignments = enumerate_poles(s.p, D, false);
  std::vector<cplx> values(assignments.size());
  std::vector<std::exception_ptr> errors(assignments.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
#endif
  for (long long i = 0; i < static_cast<long long>(assignments.size()); ++i) {
    try {
      values[static_cast<std::size_t>(i)] =
          residue_at(rho, s, assignments[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  (void)parallel;
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  DegreeLedger ledger;
  ledger.z_point = s.p.z;
  ledger.truncation = D;
  std::vector<ComplexSum> per_degree(static_cast<std::size_t>(D + 1));
  for (std::size_t i = 0; i < assignments.size(); ++i)
    per_degree[static_cast<std::size_t>(assignments[i].total_degree())].add(values[i]);
  ledger.contributions.resize(static_cast<std::size_t>(D + 1));
  for (int d = 0; d <= D; ++d)
    ledger.contributions[static_cast<std::size_t>(d)] = per_degree[static_cast<std::size_t>(d)].value();

  if (D >= 1) {
    const double last = std::abs(ledger.contributions[static_cast<std::size_t>(D)]);
    const double prev = std::abs(ledger.contributions[static_cast<std::size_t>(D - 1)]);
    if (last >= prev && last > 0.0) ledger.convergence_warning = true;
  }
  return ledger;
}

}  // namespace

DegreeLedger vertex_series(const Descendent& rho, const StabSpec& s, int D, double z_max) {
  return vertex_series_impl(rho, s, D, z_max, true);
}

DegreeLedger vertex_series_serial(const Descendent& rho, const StabSpec& s, int D,
                                  double z_max) {
  return vertex_series_impl(rho, s, D, z_max, false);
}

// -------------------------------------------------------------- quadrature

namespace {

struct Grid {
  int k = 1;
  int N = 0;
  std::size_t size = 0;
  std::vector<double> offset;

  Grid(int k_, int N_) : k(k_), N(N_) {
    size = 1;
    for (int i = 0; i < k; ++i) {
      if (size > (1ull << 31) / static_cast<std::size_t>(N))
        throw DomainError("quadrature grid too large");
      size *= static_cast<std::size_t>(N);
    }
    offset.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      offset[static_cast<std::size_t>(i)] = kTwoPi * (i + 1) / (7.0 * k);
  }

  void point(std::size_t g, std::vector<cplx>& x) const {
    for (int i = k - 1; i >= 0; --i) {
      const int digit = static_cast<int>(g % static_cast<std::size_t>(N));
      g /= static_cast<std::size_t>(N);
      x[static_cast<std::size_t>(i)] =
          std::polar(1.0, kTwoPi * digit / N + offset[static_cast<std::size_t>(i)]);
    }
  }
};

void check_grid_separation(const Grid& grid) {
  // all pairwise ratios keep |x_i/x_j - 1| above the near-diagonal threshold
  for (int i = 0; i < grid.k; ++i)
    for (int j = 0; j < grid.k; ++j) {
      if (i == j) continue;
      for (int d = 0; d < grid.N; ++d) {
        const double ang = kTwoPi * d / grid.N + grid.offset[static_cast<std::size_t>(i)] -
                           grid.offset[static_cast<std::size_t>(j)];
        if (std::abs(std::polar(1.0, ang) - 1.0) < 1e-8)
          throw NearDiagonal("quadrature grid hits the diagonal locus; change N");
      }
    }
}

void validate_quadrature(const StabSpec& s, int N) {
  validate_spec(s);
  if (N < 32 || N > 4096) throw DomainError("quadrature: N must lie in 32..4096");
}

}  // namespace

cplx quadrature_oracle(const Descendent& rho, const StabSpec& s_in, int N) {
  const StabSpec s = integration_spec(s_in);
  validate_quadrature(s, N);
  const Grid grid(s.p.k, N);
  check_grid_separation(grid);
  double fact = 1.0;
  for (int i = 2; i <= s.p.k; ++i) fact *= i;
  const cplx total = map_sum(grid.size, [&](std::size_t g) {
    std::vector<cplx> x(static_cast<std::size_t>(grid.k));
    grid.point(g, x);
    return rho.eval(s.p, x) * stab_envelope(s, x) * big_phi(x, s.p);
  });
  return total / (std::pow(static_cast<double>(N), s.p.k) * fact);
}

cplx quadrature_oracle_serial(const Descendent& rho, const StabSpec& s_in, int N) {
  const StabSpec s = integration_spec(s_in);
  validate_quadrature(s, N);
  const Grid grid(s.p.k, N);
  check_grid_separation(grid);
  double fact = 1.0;
  for (int i = 2; i <= s.p.k; ++i) fact *= i;
  const cplx total = map_sum_serial(grid.size, [&](std::size_t g) {
    std::vector<cplx> x(static_cast<std::size_t>(grid.k));
    grid.point(g, x);
    return rho.eval(s.p, x) * stab_envelope(s, x) * big_phi(x, s.p);
  });
  return total / (std::pow(static_cast<double>(N), s.p.k) * fact);
}

std::vector<cplx> quadrature_oracle_batch(std::span<const Descendent> rhos, const StabSpec& s_in,
                                          int N) {
  const StabSpec s = integration_spec(s_in);
  validate_quadrature(s, N);
  const Grid grid(s.p.k, N);
  check_grid_separation(grid);
  std::vector<cplx> weights(grid.size);
  std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
  for (long long g = 0; g < static_cast<long long>(grid.size); ++g) {
    try {
      std::vector<cplx> x(static_cast<std::size_t>(grid.k));
      grid.point(static_cast<std::size_t>(g), x);
      weights[static_cast<std::size_t>(g)] = stab_envelope(s, x) * big_phi(x, s.p);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  double fact = 1.0;
  for (int i = 2; i <= s.p.k; ++i) fact *= i;
  const double norm = std::pow(static_cast<double>(N), s.p.k) * fact;

  std::vector<cplx> out;
  out.reserve(rhos.size());
  for (const auto& rho : rhos) {
    const cplx total = map_sum(grid.size, [&](std::size_t g) {
      std::vector<cplx> x(static_cast<std::size_t>(grid.k));
      grid.point(g, x);
      return weights[g] * rho.eval(s.p, x);
    });
    out.push_back(total / norm);
  }
  return out;
}

double contour_min_denominator(const StabSpec& s, int N) {
  validate_quadrature(s, N);
  const Grid grid(s.p.k, N);
  double global_min = 1e300;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : global_min)
#endif
  for (long long g = 0; g < static_cast<long long>(grid.size); ++g) {
    double local = 1e300;
    try {
      std::vector<cplx> x(static_cast<std::size_t>(grid.k));
      grid.point(static_cast<std::size_t>(g), x);
      for (int i = 0; i < s.p.k; ++i)
        for (int j = 0; j < s.p.n; ++j) {
          const cplx aj = s.p.a[static_cast<std::size_t>(j)];
          const cplx xi = x[static_cast<std::size_t>(i)];
          local = std::min(local, std::abs(phi(aj / xi, s.p)));
          local = std::min(local, std::abs(phi(s.p.hbar * xi / aj, s.p)));
        }
      for (int i = 0; i < s.p.k; ++i)
        for (int j = 0; j < s.p.k; ++j) {
          const cplx r = x[static_cast<std::size_t>(j)] / x[static_cast<std::size_t>(i)];
          local = std::min(local, std::abs(phi(s.p.q * r / s.p.hbar, s.p)));
        }
    } catch (...) {
      local = 0.0;  // a diverging factor counts as a pole on the contour
    }
    global_min = std::min(global_min, local);
  }
  return global_min;
}

}  // namespace vxl
