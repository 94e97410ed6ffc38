#include "vertexlab/monodromy.hpp"

#include <cmath>

#include "vertexlab/errors.hpp"
#include "vertexlab/qseries.hpp"
#include "vertexlab/stab.hpp"

namespace vxl {

Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<cplx>(n, {0.0, 0.0}));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = {1.0, 0.0};
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const std::size_t m = b[0].size();
  const std::size_t inner = b.size();
  Mat c(n, std::vector<cplx>(m, {0.0, 0.0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < inner; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

Mat mat_inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat work = a;
  Mat inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work[r][col]) > std::abs(work[piv][col])) piv = r;
    if (std::abs(work[piv][col]) < 1e-300)
      throw SingularError("matrix inversion: zero pivot");
    std::swap(work[piv], work[col]);
    std::swap(inv[piv], inv[col]);
    const cplx d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = work[r][col];
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

double mat_norm1(const Mat& a) {
  const std::size_t n = a.size();
  double best = 0.0;
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(a[i][j]);
    best = std::max(best, col);
  }
  return best;
}

double mat_cond1(const Mat& a) { return mat_norm1(a) * mat_norm1(mat_inverse(a)); }

namespace {

Params minus_side_params(const Params& p) {
  // the minus chamber lives in the inverted Kahler coordinate
  return p.with_z(cplx(1.0, 0.0) / p.z);
}

RestrictionMatrix restriction_matrix_impl(Chamber chamber, const Params& p, bool parallel) {
  validate_params(p);
  RestrictionMatrix out;
  out.chamber = chamber;
  out.z_point = p.z;
  out.basis = all_fixed_points(p.k, p.n);
  const std::size_t dim = out.basis.size();
  out.S.assign(dim, std::vector<cplx>(dim, {0.0, 0.0}));

  const Params eval_params = (chamber == Chamber::plus) ? p : minus_side_params(p);

  std::vector<std::exception_ptr> errors(dim * dim);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) collapse(2) if (parallel)
#endif
  for (long long nu = 0; nu < static_cast<long long>(dim); ++nu)
    for (long long mu = 0; mu < static_cast<long long>(dim); ++mu) {
      try {
        StabSpec spec{out.basis[static_cast<std::size_t>(mu)], chamber, eval_params};
        out.S[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] =
            stab_restrict(spec, out.basis[static_cast<std::size_t>(nu)]);
      } catch (...) {
        errors[static_cast<std::size_t>(nu) * dim + static_cast<std::size_t>(mu)] =
            std::current_exception();
      }
    }
  (void)parallel;
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& row : out.S)
    for (const auto& v : row)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw SingularError("restriction matrix has non-finite entries");
  return out;
}

}  // namespace

RestrictionMatrix restriction_matrix(Chamber chamber, const Params& p) {
  return restriction_matrix_impl(chamber, p, true);
}

RestrictionMatrix restriction_matrix_serial(Chamber chamber, const Params& p) {
  return restriction_matrix_impl(chamber, p, false);
}

Mat monodromy_matrix(const Params& p) {
  const RestrictionMatrix sp = restriction_matrix(Chamber::plus, p);
  const RestrictionMatrix sm = restriction_matrix(Chamber::minus, p);
  constexpr double kCondLimit = 1e12;
  if (mat_cond1(sp.S) > kCondLimit)
    throw SingularError("plus-chamber restriction matrix is ill-conditioned");
  if (mat_cond1(sm.S) > kCondLimit)
    throw SingularError("minus-chamber restriction matrix is ill-conditioned");
  return mat_mul(mat_inverse(sm.S), sp.S);
}

std::vector<cplx> kahler_shift_diagonal(const Params& p) {
  const auto basis = all_fixed_points(p.k, p.n);
  std::vector<cplx> d;
  d.reserve(basis.size());
  for (const auto& fp : basis) {
    cplx v(1.0, 0.0);
    for (int label : fp.mu) v *= p.a[static_cast<std::size_t>(label - 1)];
    d.push_back(v);
  }
  return d;
}

double monodromy_periodicity_residual(const Params& p) {
  const Mat m = monodromy_matrix(p);
  const Mat mq = monodromy_matrix(p.with_z(p.q * p.z));
  const auto d = kahler_shift_diagonal(p);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const cplx expected = d[i] * m[i][j] / d[j];
      const double scale = std::max(std::abs(expected), std::abs(mq[i][j]));
      if (scale < 1e-280) continue;
      worst = std::max(worst, std::abs(mq[i][j] - expected) / scale);
    }
  return worst;
}

cplx scalar_theta_monodromy(cplx z, const Params& p) {
  const cplx f0 = phi(p.q * z, p);
  const cplx finv = phi(cplx(1.0, 0.0) / z, p);
  if (f0 == cplx(0.0, 0.0) || finv == cplx(0.0, 0.0))
    throw ResonanceError("scalar monodromy: z lies in q^Z");
  const cplx ratio = f0 * finv;  // f_0 / f_inf with f_inf = phi(1/z)^{-1}
  const cplx th = theta(z, p);
  if (std::abs(ratio - th) > 1e-13 * std::abs(th))
    throw Error("scalar monodromy does not reproduce theta");
  return ratio;
}

}  // namespace vxl
