#include "padepm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "padepm/errors.hpp"

namespace padepm::numerics {

void require_finite(const CMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw NonFinite(std::string(what) + ": matrix has non-finite entries");
  }
}

namespace {

void require_nonempty(const CMatrix& a, const char* what) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw InvalidArgument(std::string(what) + ": empty matrix");
  }
}

}  // namespace

SvdResult svd(const CMatrix& a) {
  require_nonempty(a, "svd");
  require_finite(a, "svd");
  Eigen::JacobiSVD<CMatrix> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (dec.info() != Eigen::Success) {
    throw ConvergenceFailure("svd did not converge");
  }
  SvdResult out;
  out.u = dec.matrixU();
  out.vh = dec.matrixV().adjoint();
  const auto& s = dec.singularValues();
  out.sigma.assign(s.data(), s.data() + s.size());
  return out;
}

std::vector<double> singular_values(const CMatrix& a) {
  require_nonempty(a, "singular_values");
  require_finite(a, "singular_values");
  Eigen::JacobiSVD<CMatrix> dec(a);
  if (dec.info() != Eigen::Success) {
    throw ConvergenceFailure("svd did not converge");
  }
  const auto& s = dec.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
  require_nonempty(a, "eigenvalues");
  if (a.rows() != a.cols()) {
    throw InvalidArgument("eigenvalues: matrix is not square");
  }
  require_finite(a, "eigenvalues");
  Eigen::ComplexEigenSolver<CMatrix> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("eigenvalue iteration did not converge");
  }
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

CMatrix qr_solve(const CMatrix& a, const CMatrix& b, double rank_tol) {
  require_nonempty(a, "qr_solve");
  if (a.rows() < a.cols()) {
    throw InvalidArgument("qr_solve: system is underdetermined");
  }
  if (b.rows() != a.rows()) {
    throw InvalidArgument("qr_solve: row count mismatch");
  }
  require_finite(a, "qr_solve");
  require_finite(b, "qr_solve");

  const Eigen::Index n = a.cols();
  Eigen::HouseholderQR<CMatrix> qr(a);
  const auto r = qr.matrixQR().topLeftCorner(n, n);

  double rmax = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) rmax = std::max(rmax, std::abs(r(i, i)));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rmax == 0.0 || std::abs(r(i, i)) < rank_tol * rmax) {
      throw RankDeficient("qr_solve: R is numerically singular at column " +
                          std::to_string(i));
    }
  }

  CMatrix qhb = qr.householderQ().adjoint() * b;
  CMatrix x = qhb.topRows(n);
  r.template triangularView<Eigen::Upper>().solveInPlace(x);
  return x;
}

std::vector<Complex> polynomial_roots(const Coeffs& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg >= 0 && coeffs[deg] == Complex{}) --deg;
  if (deg < 0) throw AllZero("polynomial_roots: zero polynomial");
  if (deg == 0) return {};

  // Companion matrix of the monic polynomial z^deg + sum_i (c_i/c_deg) z^i.
  CMatrix comp = CMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
  return eigenvalues(comp);
}

}  // namespace padepm::numerics
