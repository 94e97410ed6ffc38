#include <cmath>
#include <numeric>

#include "doctest.h"
#include "vertexlab/errors.hpp"
#include "vertexlab/mellin.hpp"
#include "vertexlab/qseries.hpp"
#include "vertexlab/reduction.hpp"
#include "vertexlab/rng.hpp"
#include "vertexlab/selftest.hpp"

using vxl::cplx;

namespace {

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max({std::abs(want), std::abs(got), 1e-300});
}

double binom(int a, int b) {
  double v = 1.0;
  for (int i = 1; i <= b; ++i) v = v * (a - b + i) / i;
  return v;
}

}  // namespace

TEST_CASE("descendent construction and symmetry") {
  auto e1 = vxl::Descendent::elementary1(3, 4);
  CHECK(e1.is_symmetric());
  auto e1sq = vxl::Descendent::elementary1_squared(3, 4);
  CHECK(e1sq.is_symmetric());

  const auto p = vxl::admissible_point(71, 3, 4);
  std::vector<cplx> x{cplx(1.1, 0.2), cplx(0.8, -0.1), cplx(0.95, 0.4)};
  const cplx s = x[0] + x[1] + x[2];
  CHECK(rel(e1.eval(p, x), s) < 1e-15);
  CHECK(rel(e1sq.eval(p, x), s * s) < 1e-14);

  vxl::Descendent bad;
  vxl::Monomial m = vxl::Monomial::unit(2, 2);
  m.e_x[0] = 1;  // x_1 alone is not symmetric
  bad.terms.emplace_back(m, cplx(1, 0));
  CHECK_FALSE(bad.is_symmetric());
}

TEST_CASE("gamma factors agree between character and product assembly") {
  for (auto [k, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    const auto p = vxl::admissible_point(72 + static_cast<std::uint64_t>(n), k, n);
    vxl::Rng rng(5);
    for (int t = 0; t < 5; ++t) {
      std::vector<cplx> x(static_cast<std::size_t>(k));
      for (auto& v : x) v = rng.in_annulus(0.9, 1.1);
      CHECK(rel(vxl::gamma_prime(x, p), vxl::gamma_prime_product(x, p)) < 1e-12);
      CHECK(rel(vxl::gamma_infty(x, p), vxl::gamma_infty_product(x, p)) < 1e-12);
    }
  }
}

TEST_CASE("gamma factors on an empty gauge group are trivial") {
  vxl::Params p;  // deliberately unvalidated: k = 0 makes every product empty
  p.k = 0;
  p.n = 1;
  p.q = cplx(0.06, 0.0);
  p.hbar_sqrt = cplx(0.45, 0.0);
  p.hbar = p.hbar_sqrt * p.hbar_sqrt;
  p.a = {cplx(0.6, 0.0)};
  p.z = cplx(0.02, 0.0);
  std::vector<cplx> x;
  CHECK(vxl::gamma_prime(x, p) == cplx(1, 0));
  CHECK(vxl::gamma_infty(x, p) == cplx(1, 0));
  CHECK(vxl::gamma_prime_product(x, p) == cplx(1, 0));
}

TEST_CASE("gamma ratio collapses to a finite product") {
  const auto p = vxl::admissible_point(73, 2, 3);
  vxl::Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<cplx> x{rng.in_annulus(0.9, 1.1), rng.in_annulus(0.9, 1.1)};
    cplx expect(1, 0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        expect /= cplx(1, 0) - x[static_cast<std::size_t>(i)] /
                                   (p.hbar * x[static_cast<std::size_t>(j)]);
    CHECK(rel(vxl::gamma_infty(x, p) / vxl::gamma_prime(x, p), expect) < 1e-12);
  }
}

TEST_CASE("gamma prime diagonal factor") {
  const auto p = vxl::admissible_point(74, 2, 2);
  const cplx diag = vxl::phi(p.q, p.q) / vxl::phi(p.q / p.hbar, p.q);
  // the i=j part of the gauge block is x-independent
  cplx direct(1, 0);
  for (int i = 0; i < p.k; ++i) direct *= vxl::phi(p.q, p.q) / vxl::phi(p.q / p.hbar, p.q);
  CHECK(rel(direct, diag * diag) < 1e-15);
}

TEST_CASE("big_phi closed form at k=1") {
  const auto p = vxl::admissible_point(75, 1, 2);
  vxl::Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const cplx x0 = rng.in_annulus(0.9, 1.1);
    std::vector<cplx> x{x0};
    cplx expect = vxl::phi(p.q, p.q) / vxl::phi(p.q / p.hbar, p.q);
    for (const auto& a : p.a) expect /= vxl::phi(a / x0, p.q) * vxl::phi(p.hbar * x0 / a, p.q);
    CHECK(rel(vxl::big_phi(x, p), expect) < 1e-13);
  }
}

TEST_CASE("vandermonde factor sits inside the phi-circle block") {
  const auto p = vxl::admissible_point(76, 3, 3);
  vxl::Rng rng(11);
  std::vector<cplx> x{rng.in_annulus(0.9, 1.1), rng.in_annulus(0.9, 1.1),
                      rng.in_annulus(0.9, 1.1)};
  cplx lhs(1, 0), rhs(1, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const cplx r = x[static_cast<std::size_t>(j)] / x[static_cast<std::size_t>(i)];
      lhs *= vxl::phi_circle(r, p.q);
      rhs *= (cplx(1, 0) - r) * vxl::phi(p.q * r, p.q);
    }
  CHECK(rel(lhs, rhs) < 1e-13);
}

TEST_CASE("phi to gamma-prime relation") {
  const auto p = vxl::admissible_point(77, 2, 2);
  vxl::Rng rng(13);
  std::vector<cplx> x{rng.in_annulus(0.9, 1.1), rng.in_annulus(0.9, 1.1)};
  cplx expect(1, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const cplx xi = x[static_cast<std::size_t>(i)];
      const cplx aj = p.a[static_cast<std::size_t>(j)];
      expect /= (cplx(1, 0) - aj / xi) * (cplx(1, 0) - p.hbar * xi / aj);
    }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      expect *= cplx(1, 0) - x[static_cast<std::size_t>(j)] / x[static_cast<std::size_t>(i)];
    }
  CHECK(rel(vxl::big_phi(x, p) / vxl::gamma_prime(x, p), expect) < 1e-12);
}

TEST_CASE("integrand assembles the three factors") {
  const auto p11 = vxl::admissible_point(92, 1, 1);
  const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p11};
  const auto rho = vxl::Descendent::elementary1(1, 1);
  const cplx x0(1.07, 0.21);
  std::vector<cplx> x{x0};
  // k=1, n=1: integrand = rho(x) f_1(x,z) phi(q) / (phi(a/x) phi(hbar x/a) phi(q/hbar))
  const cplx want = x0 * vxl::f_building_block(1, x0, p11.z, p11) * vxl::phi(p11.q, p11.q) /
                    (vxl::phi(p11.a[0] / x0, p11.q) * vxl::phi(p11.hbar * x0 / p11.a[0], p11.q) *
                     vxl::phi(p11.q / p11.hbar, p11.q));
  CHECK(rel(vxl::integrand(rho, spec, x), want) < 1e-13);

  // symmetric under swapping the coordinates
  const auto p23 = vxl::admissible_point(93, 2, 3);
  const vxl::StabSpec s23{vxl::FixedPoint{{1, 3}}, vxl::Chamber::plus, p23};
  const auto r23 = vxl::Descendent::elementary1_squared(2, 3);
  std::vector<cplx> y{cplx(1.12, 0.1), cplx(0.93, -0.2)};
  std::vector<cplx> yswap{y[1], y[0]};
  CHECK(rel(vxl::integrand(r23, s23, y), vxl::integrand(r23, s23, yswap)) < 1e-13);
}

TEST_CASE("pole enumeration shapes and counts") {
  const auto p12 = vxl::admissible_point(78, 1, 2);
  const auto list1 = vxl::enumerate_poles(p12, 1, false);
  REQUIRE(list1.size() == 4);
  for (const auto& pa : list1) {
    CHECK(pa.points.size() == 1);
    CHECK(pa.points[0].level == 1);
  }

  const auto p22 = vxl::admissible_point(79, 2, 2);
  const auto list2 = vxl::enumerate_poles(p22, 0, false);
  REQUIRE(list2.size() == 1);
  CHECK(list2[0].points[0].label == 1);
  CHECK(list2[0].points[1].label == 2);

  for (auto [k, n, D] : {std::tuple{1, 2, 4}, {2, 3, 3}, {2, 4, 2}}) {
    const auto p = vxl::admissible_point(80 + static_cast<std::uint64_t>(n), k, n);
    const auto list = vxl::enumerate_poles(p, D, false);
    CHECK(static_cast<double>(list.size()) == binom(n, k) * binom(D + k, k));
  }

  // towers appear only in the unrestricted enumeration, with strict degrees
  const auto both = vxl::enumerate_poles(p22, 2, true);
  bool saw_tower = false;
  for (const auto& pa : both)
    if (!pa.simple_towers()) {
      saw_tower = true;
      REQUIRE(pa.points.size() == 2);
      CHECK(pa.points[0].label == pa.points[1].label);
      CHECK(pa.points[0].level == 1);
      CHECK(pa.points[1].level == 2);
      CHECK(pa.points[1].degree > pa.points[0].degree);
    }
  CHECK(saw_tower);
}

TEST_CASE("residue anchor at k=1, n=1") {
  const auto p = vxl::admissible_point(81, 1, 1);
  const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::one(1, 1);
  vxl::PoleAssignment pa;
  pa.points = {vxl::PolePoint{1, 1, 0}};

  const cplx got = vxl::residue_at(rho, spec, pa);
  // rho(a_1) f_1(a_1, z) / (phi(hbar) phi(q/hbar)); phi_skip(1; 0) = phi(q)
  const cplx want = vxl::f_building_block(1, p.a[0], p.z, p) /
                    (vxl::phi(p.hbar, p.q) * vxl::phi(p.q / p.hbar, p.q));
  CHECK(rel(got, want) < 1e-13);
}

TEST_CASE("residues are symmetric in the slot order") {
  const auto p = vxl::admissible_point(82, 2, 3);
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 2}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::elementary1(2, 3);
  for (const auto& pa : vxl::enumerate_poles(p, 1, false)) {
    vxl::PoleAssignment swapped = pa;
    std::swap(swapped.points[0], swapped.points[1]);
    CHECK(rel(vxl::residue_at(rho, spec, swapped), vxl::residue_at(rho, spec, pa)) < 1e-13);
  }
}

TEST_CASE("tower residues vanish through the wheel") {
  const auto p = vxl::admissible_point(83, 2, 3);
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 3}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::one(2, 3);
  const cplx scale = vxl::vertex_series(rho, spec, 3).total();
  vxl::ComplexSum towers;
  int count = 0;
  for (const auto& pa : vxl::enumerate_poles(p, 3, true))
    if (!pa.simple_towers()) {
      towers.add(vxl::residue_at(rho, spec, pa));
      ++count;
    }
  CHECK(count > 0);
  CHECK(std::abs(towers.value()) < 1e-9 * std::abs(scale));
}

TEST_CASE("quadrature self-convergence and linearity") {
  const auto p = vxl::admissible_point(84, 1, 1);
  const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::one(1, 1);
  const cplx v64 = vxl::quadrature_oracle(rho, spec, 64);
  const cplx v128 = vxl::quadrature_oracle(rho, spec, 128);
  CHECK(std::abs(v64 - v128) < 1e-12 * std::max(1.0, std::abs(v128)));

  const auto zero = vxl::Descendent::zero(1, 1);
  CHECK(vxl::quadrature_oracle(zero, spec, 64) == cplx(0, 0));

  // linear in the insertion
  const auto e1 = vxl::Descendent::elementary1(1, 1);
  vxl::Descendent combo = vxl::Descendent::one(1, 1);
  for (auto& [m, c] : combo.terms) c *= cplx(0.3, 0.5);
  for (auto t : e1.terms) {
    t.second *= cplx(-0.2, 1.1);
    combo.terms.push_back(t);
  }
  combo.canonicalize();
  const cplx lc = vxl::quadrature_oracle(combo, spec, 64);
  const cplx l0 = vxl::quadrature_oracle(vxl::Descendent::one(1, 1), spec, 64);
  const cplx l1 = vxl::quadrature_oracle(e1, spec, 64);
  CHECK(rel(lc, cplx(0.3, 0.5) * l0 + cplx(-0.2, 1.1) * l1) < 1e-12);
}

TEST_CASE("contour is pole-free under the magnitude ordering") {
  const auto p = vxl::admissible_point(85, 2, 3);
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 2}}, vxl::Chamber::plus, p};
  CHECK(vxl::contour_min_denominator(spec, 48) > 1e-12);
}

TEST_CASE("residue series agrees with the quadrature oracle") {
  for (auto [k, n] : {std::pair{1, 1}, {1, 2}}) {
    const auto base = vxl::admissible_point(86 + static_cast<std::uint64_t>(n), k, n);
    const auto p = base.with_z(cplx(0.01, 0.002));
    REQUIRE(vxl::params_violation(p).empty());
    const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p};
    for (const auto* name : {"1", "e1"}) {
      const auto rho = vxl::Descendent::named(name, k, n);
      const auto ledger = vxl::vertex_series(rho, spec, 6);
      const cplx orc = vxl::quadrature_oracle(rho, spec, 96);
      CHECK(rel(ledger.total(), orc) < 1e-8);
      CHECK(ledger.decay_ratio() < 0.6);
    }
  }
}

TEST_CASE("degree-zero ledger entry dominates as z vanishes") {
  const auto base = vxl::admissible_point(87, 1, 2);
  const vxl::FixedPoint mu{{1}};
  auto deviation = [&](double zmag) {
    const auto p = base.with_z(std::polar(zmag, 0.7));
    REQUIRE(vxl::params_violation(p).empty());
    const vxl::StabSpec spec{mu, vxl::Chamber::plus, p};
    const auto rho = vxl::Descendent::one(1, 2);
    const cplx oracle = vxl::quadrature_oracle(rho, spec, 96);
    const cplx lead = vxl::vertex_series(rho, spec, 6).contributions[0];
    return std::abs(oracle - lead);
  };
  // the tail above degree zero scales like z
  CHECK(deviation(0.004) < 0.5 * deviation(0.02));
}

TEST_CASE("truncation error decays geometrically up to the z guardrail") {
  // a point whose expansion stays contractive at |z| = z_max = 0.05
  vxl::Params p;
  p.k = 1;
  p.n = 2;
  p.a = {std::polar(0.775, 0.21), std::polar(0.805, 0.58)};
  p.hbar_sqrt = std::polar(std::sqrt(0.61), 0.055);
  p.hbar = p.hbar_sqrt * p.hbar_sqrt;
  p.q = std::polar(0.21, 0.42);
  p.z = std::polar(0.05, 0.9);
  REQUIRE(vxl::params_violation(p).empty());
  const vxl::StabSpec spec{vxl::FixedPoint{{2}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::one(1, 2);
  const cplx orc = vxl::quadrature_oracle(rho, spec, 128);
  std::vector<double> err;
  for (int D = 1; D <= 5; ++D)
    err.push_back(std::abs(vxl::vertex_series(rho, spec, D).total() - orc));
  // the fitted per-degree ratio of the geometric envelope stays below 1
  double ratio_sum = 0.0;
  int cnt = 0;
  for (std::size_t i = 0; i + 1 < err.size(); ++i)
    if (err[i] > 0) {
      ratio_sum += err[i + 1] / err[i];
      ++cnt;
    }
  REQUIRE(cnt > 0);
  CHECK(ratio_sum / cnt < 1.0);
}

TEST_CASE("minus chamber series converges near z = infinity") {
  const auto base = vxl::admissible_point(89, 1, 2);
  const auto p = base.with_z(cplx(1, 0) / cplx(0.005, 0.0012));
  const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::minus, p};
  const auto rho = vxl::Descendent::one(1, 2);
  const auto ledger = vxl::vertex_series(rho, spec, 8);
  const cplx orc = vxl::quadrature_oracle(rho, spec, 96);
  CHECK(rel(ledger.total(), orc) < 1e-6);
  CHECK(ledger.decay_ratio() < 0.5);
}

TEST_CASE("three-variable residue series matches the torus integral") {
  // the gauge-block pole ring at |x_j/x_i| = |q/hbar| bounds the trapezoid
  // rate, so the point keeps that ratio small
  vxl::Params p;
  p.k = 3;
  p.n = 3;
  p.a = {std::polar(0.50, 0.12), std::polar(0.56, 0.47), std::polar(0.63, 0.82)};
  p.hbar_sqrt = std::polar(std::sqrt(0.30), 0.04);
  p.hbar = p.hbar_sqrt * p.hbar_sqrt;
  p.q = std::polar(0.15, 0.29);
  p.z = std::polar(0.002, 0.7);
  REQUIRE(vxl::params_violation(p).empty());
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 2, 3}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::elementary1(3, 3);
  const auto ledger = vxl::vertex_series(rho, spec, 4);
  const cplx orc = vxl::quadrature_oracle(rho, spec, 48);
  CHECK(rel(ledger.total(), orc) < 1e-5);
  CHECK(ledger.decay_ratio() < 0.1);
}

TEST_CASE("deep towers vanish too") {
  // level-3 towers exercise the chained gauge-block pole factors
  const auto p = vxl::admissible_point(94, 3, 3);
  const vxl::StabSpec spec{vxl::FixedPoint{{1, 2, 3}}, vxl::Chamber::plus, p};
  const auto rho = vxl::Descendent::one(3, 3);
  int multi = 0, deep = 0;
  vxl::ComplexSum towers;
  for (const auto& pa : vxl::enumerate_poles(p, 3, true)) {
    if (pa.simple_towers()) continue;
    ++multi;
    for (const auto& pt : pa.points) deep = std::max(deep, pt.level);
    towers.add(vxl::residue_at(rho, spec, pa));
  }
  CHECK(multi > 0);
  CHECK(deep == 3);
  const cplx scale = vxl::vertex_series(rho, spec, 2).total();
  CHECK(std::abs(towers.value()) < 1e-9 * std::abs(scale));
}

TEST_CASE("convergence guardrails") {
  const auto p = vxl::admissible_point(90, 1, 2);
  const vxl::StabSpec spec{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p.with_z(cplx(0.3, 0))};
  const auto rho = vxl::Descendent::one(1, 2);
  CHECK_THROWS_AS(vxl::vertex_series(rho, spec, 4), vxl::DomainError);
  const vxl::StabSpec ok{vxl::FixedPoint{{1}}, vxl::Chamber::plus, p};
  CHECK_THROWS_AS(vxl::vertex_series(rho, ok, 40), vxl::DomainError);
  CHECK_THROWS_AS(vxl::quadrature_oracle(rho, ok, 8), vxl::DomainError);
}

TEST_CASE("mellin battery passes") {
  const auto p = vxl::admissible_point(91, 2, 3);
  for (const auto& c : vxl::check_mellin(p, 9)) {
    INFO(c.name, " residual ", c.residual);
    CHECK(c.pass);
  }
}
