#pragma once

#include <vector>

#include "padepm/baseline.hpp"
#include "padepm/numerics.hpp"
#include "padepm/series.hpp"
#include "padepm/types.hpp"

namespace padepm {

struct PoleTerm {
  Complex pole;
  Complex weight;
};

/// head(z) + z^shift * sum_j w_j / (1 - z / p_j).
///
/// For k >= 0 the head carries c_0..c_k verbatim and shift = k+1; for k < 0
/// the head is empty and shift = 0. A pole exactly at the origin contributes
/// nothing away from z = 0 (w p / (p - z) = 0).
struct PoleResidueForm {
  Coeffs head;
  int shift = 0;
  std::vector<PoleTerm> terms;

  [[nodiscard]] std::vector<Complex> poles() const;
  [[nodiscard]] std::vector<Complex> weights() const;
};

/// Shifted Hankel blocks whose pencil C1 - lambda C2 loses rank at the poles.
struct HankelBlocks {
  CMatrix c1;
  CMatrix c2;
};

/// (2m-l) x (l+1) Hankel matrix with entries c_{k+1+i+j}, zero below index 0.
CMatrix build_combined(const PowerSeries& s, const Conformation& conf);

/// C1 = first l columns, C2 = last l columns of build_combined().
HankelBlocks build_blocks(const PowerSeries& s, const Conformation& conf);

/// Eigenvalues of C2^+ C1 computed through QR of C2; these are the poles
/// themselves, so a pole at the origin is representable. rank_tol is passed
/// to qr_solve; 0 disables the rank guard.
std::vector<Complex> pm1_poles(
    const HankelBlocks& blocks,
    double rank_tol = numerics::kDefaultRankTolerance);

/// Weights of the partial fractions for given poles.
///
/// The Vandermonde system in d_j = 1/p_j uses rows c_0.. (k < 0) or
/// c_{k+1}.. (k >= 0). With use_all_rows = false exactly poles.size() rows
/// are used; otherwise every available row enters a least-squares solve.
/// Throws DuplicatePole for coincident poles and SingularVandermonde when the
/// system is numerically rank deficient.
std::vector<Complex> pm1_residues(const PowerSeries& s,
                                  const std::vector<Complex>& poles,
                                  const Conformation& conf, bool use_all_rows,
                                  double rank_tol = numerics::kDefaultRankTolerance);

/// Expands a pole/residue form into numerator and denominator polynomials.
/// The denominator is prod_j (1 - z/p_j) with b_0 = 1 unless a pole sits at
/// the origin, in which case it is scaled to unit largest coefficient.
RationalApproximant to_rational(const PoleResidueForm& prf);

/// Head coefficients c_0..c_k for k >= 0, empty otherwise.
Coeffs head_of(const PowerSeries& s, const Conformation& conf);

/// Sorts by magnitude, ties broken by argument.
void sort_poles(std::vector<Complex>& poles);
void sort_terms(std::vector<PoleTerm>& terms);

struct PencilResult {
  PoleResidueForm prf;
  RationalApproximant rational;
};

/// Matrix pencil Pade approximant with l = m and a square residue solve.
/// rank_tol = 0 runs the pencil unguarded, as for ill-conditioned Hankel
/// blocks where the caller wants the raw eigenvalues anyway.
PencilResult pm1(const PowerSeries& s, const Conformation& conf,
                 double rank_tol = numerics::kDefaultRankTolerance);

}  // namespace padepm
