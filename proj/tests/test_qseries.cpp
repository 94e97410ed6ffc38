#include <complex>

#include "doctest.h"
#include "vertexlab/errors.hpp"
#include "vertexlab/qseries.hpp"
#include "vertexlab/rng.hpp"
#include "vertexlab/selftest.hpp"

using vxl::cplx;

namespace {

const vxl::Params kP = vxl::admissible_point(11, 1, 2);

double rel(cplx got, cplx want) {
  return std::abs(got - want) / std::max({std::abs(want), std::abs(got), 1e-300});
}

}  // namespace

TEST_CASE("phi basics") {
  CHECK(vxl::phi(cplx(0, 0), kP.q) == cplx(1, 0));
  CHECK(vxl::phi(cplx(1, 0), kP.q) == cplx(0, 0));
  // zeros on the whole lattice q^{-m}
  for (int m = 0; m <= 4; ++m) CHECK(vxl::phi(vxl::ipow(kP.q, -m), kP.q) == cplx(0, 0));
  CHECK(vxl::phi(cplx(0.37, 0.2), kP.q) != cplx(0, 0));
}

TEST_CASE("phi first-order q-difference identity") {
  vxl::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const cplx x = rng.in_annulus(0.2, 1.8);
    CHECK(rel(vxl::phi(kP.q * x, kP.q), vxl::phi(x, kP.q) / (cplx(1, 0) - x)) < 1e-12);
  }
}

TEST_CASE("phi diverges gracefully") {
  vxl::QFunctionConfig cfg;
  cfg.max_terms = 4;
  CHECK_THROWS_AS(vxl::phi(cplx(0.5, 0), cplx(0.97, 0), cfg), vxl::NonConvergent);
}

TEST_CASE("phi_skip identities") {
  const cplx q = kP.q;
  vxl::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const cplx x = rng.in_annulus(0.3, 1.5);
    for (int m = 0; m <= 5; ++m) {
      const cplx lhs = vxl::phi_skip(x, m, q) * (cplx(1, 0) - vxl::ipow(q, m) * x);
      CHECK(rel(lhs, vxl::phi(x, q)) < 1e-13);
    }
  }
  // at the removed zero the skipped product is finite and nonzero
  const cplx at0 = vxl::phi_skip(cplx(1, 0), 0, q);
  CHECK(rel(at0, vxl::phi(q, q)) < 1e-14);
  // expanded by hand: n=0 and n=1 factors times the shifted tail
  const cplx at2 = vxl::phi_skip(vxl::ipow(q, -2), 2, q);
  const cplx want =
      (cplx(1, 0) - vxl::ipow(q, -2)) * (cplx(1, 0) - vxl::ipow(q, -1)) * vxl::phi(q, q);
  CHECK(rel(at2, want) < 1e-13);
}

TEST_CASE("phi_circle case split") {
  CHECK(vxl::phi_circle(cplx(1, 0), kP.q) == vxl::phi(kP.q, kP.q));
  CHECK(vxl::phi_circle(cplx(1.0 + 1e-16, 0), kP.q) == vxl::phi(kP.q, kP.q));
  CHECK(vxl::phi_circle(cplx(0.5, 0), kP.q) == vxl::phi(cplx(0.5, 0), kP.q));
}

TEST_CASE("theta zero set and shifts") {
  const cplx q = kP.q;
  CHECK(vxl::theta(cplx(1, 0), q) == cplx(0, 0));
  CHECK(vxl::theta(q, q) == cplx(0, 0));
  CHECK(vxl::theta(cplx(1, 0) / q, q) == cplx(0, 0));

  vxl::Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const cplx z = rng.in_annulus(0.4, 1.6);
    const cplx tz = vxl::theta(z, q);
    for (int k = -2; k <= 2; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const cplx rhs = sign * vxl::ipow(q, -k * (k + 1) / 2) * vxl::ipow(z, -k) * tz;
      CHECK(rel(vxl::theta(vxl::ipow(q, k) * z, q), rhs) < 1e-10);
    }
    // inversion: theta(1/z) = -z theta(z)
    CHECK(rel(vxl::theta(cplx(1, 0) / z, q), -z * tz) < 1e-12);
  }
}

TEST_CASE("poincare kernel shift equations") {
  const cplx q = kP.q;
  vxl::Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const cplx s = rng.in_annulus(0.5, 1.5);
    const cplx z = rng.in_annulus(0.5, 1.5);
    const cplx base = vxl::u_kernel(s, z, q);
    CHECK(rel(vxl::u_kernel(q * s, z, q), base / z) < 1e-10);
    CHECK(rel(vxl::u_kernel(s, q * z, q), base / s) < 1e-10);
    // the expression is literally symmetric
    CHECK(vxl::u_kernel(s, z, q) == vxl::u_kernel(z, s, q));
  }
  CHECK_THROWS_AS(vxl::u_kernel(q, cplx(0.5, 0.1), q), vxl::ResonanceError);
}

TEST_CASE("phi_virtual cancellation and pole reporting") {
  const vxl::Params& p = kP;
  std::vector<cplx> x{cplx(0.9, 0.2)};

  vxl::VirtualCharacter v;
  vxl::Monomial w = vxl::Monomial::unit(p.k, p.n);
  w.e_q = 1;
  w.e_x[0] = 1;
  v.append(w, 1);
  v.append(w, -1);
  CHECK(vxl::phi_virtual(v, x, p) == cplx(1, 0));

  // -q T^vee with a single weight gives the 1/phi(q w) pattern
  vxl::VirtualCharacter neg;
  neg.append(w, -1);
  const cplx wval = w.eval(p, x);
  CHECK(rel(vxl::phi_virtual(neg, x, p), cplx(1, 0) / vxl::phi(wval, p.q)) < 1e-14);

  // hitting a zero under a negative multiplicity names the pole
  vxl::VirtualCharacter bad;
  vxl::Monomial one = vxl::Monomial::unit(p.k, p.n);
  bad.append(one, -1);  // phi(1) = 0
  CHECK_THROWS_AS(vxl::phi_virtual(bad, x, p), vxl::PoleHit);
}
