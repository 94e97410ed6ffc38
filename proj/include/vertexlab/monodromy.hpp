#pragma once

#include <vector>

#include "vertexlab/chars.hpp"
#include "vertexlab/params.hpp"

namespace vxl {

using Mat = std::vector<std::vector<cplx>>;

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(std::size_t n);
// partial-pivot Gaussian elimination; throws SingularError on breakdown
Mat mat_inverse(const Mat& a);
double mat_norm1(const Mat& a);
double mat_cond1(const Mat& a);  // ||A||_1 ||A^{-1}||_1

// S[nu][mu] = restriction of the mu-envelope at the fixed point nu, rows and
// columns in lexicographic fixed-point order.  The minus chamber is evaluated
// at the inverted Kahler coordinate z^{-1}, which gives both chambers the same
// entrywise scaling law S(qz)[nu][mu] = (prod a_nu / prod a_mu) S(z)[nu][mu].
struct RestrictionMatrix {
  Mat S;
  Chamber chamber = Chamber::plus;
  cplx z_point{0.0, 0.0};
  std::vector<FixedPoint> basis;
};

RestrictionMatrix restriction_matrix(Chamber chamber, const Params& p);
RestrictionMatrix restriction_matrix_serial(Chamber chamber, const Params& p);

// M = S_minus^{-1} S_plus; throws SingularError when either matrix is
// ill-conditioned (condition number above 1e12)
Mat monodromy_matrix(const Params& p);

// diag over fixed points of prod_i a_{nu_i}
std::vector<cplx> kahler_shift_diagonal(const Params& p);

// max entrywise relative residual of M(qz) - D M(z) D^{-1}
double monodromy_periodicity_residual(const Params& p);

// f_0/f_inf = phi(qz) phi(1/z); asserts equality with theta(z)
cplx scalar_theta_monodromy(cplx z, const Params& p);

}  // namespace vxl
