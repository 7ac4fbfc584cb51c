#pragma once

#include <vector>

#include "padepm/types.hpp"

/// Dense complex linear algebra used by every solver in the library.
///
/// All functions are pure; they are backed by Eigen and check their inputs
/// for non-finite entries before factorizing.
namespace padepm::numerics {

/// Full singular value decomposition A = U diag(sigma) V^H.
struct SvdResult {
  CMatrix u;                   ///< rows(A) x rows(A), unitary
  std::vector<double> sigma;   ///< min(rows, cols) values, nonincreasing
  CMatrix vh;                  ///< cols(A) x cols(A), V^H (rows addressable)
};

SvdResult svd(const CMatrix& a);

/// Singular values only, nonincreasing.
std::vector<double> singular_values(const CMatrix& a);

/// All eigenvalues of a square matrix, with multiplicity.
std::vector<Complex> eigenvalues(const CMatrix& a);

/// Relative |R_ii| threshold below which qr_solve reports rank deficiency.
inline constexpr double kDefaultRankTolerance = 1e-14;

/// Least-squares solution of A X = B through A = QR and back substitution of
/// each column of Q^H B. Throws RankDeficient when some
/// |R_ii| < rank_tol * max_j |R_jj|.
CMatrix qr_solve(const CMatrix& a, const CMatrix& b,
                 double rank_tol = kDefaultRankTolerance);

/// Roots of sum_i coeffs[i] z^i from the companion matrix. Vanishing
/// high-order coefficients are stripped first; a nonzero constant has no
/// roots. Throws AllZero when every coefficient is zero.
std::vector<Complex> polynomial_roots(const Coeffs& coeffs);

/// Throws NonFinite when any entry is NaN or infinite.
void require_finite(const CMatrix& a, const char* what);

}  // namespace padepm::numerics
