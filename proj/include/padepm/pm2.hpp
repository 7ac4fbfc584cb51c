#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padepm/numerics.hpp"
#include "padepm/pencil.hpp"

namespace padepm {

inline constexpr double kDefaultFilterDigits = 14.0;
inline constexpr double kDefaultOriginRadius = 1e-3;

struct FilterParams {
  /// Accurate digits t. Unset: the series' declared digits, else 14.
  std::optional<double> t;
  /// Eigenvalues with |lambda| <= origin_radius are treated as spurious.
  double origin_radius = kDefaultOriginRadius;
  /// Passes through the Hankel SVD before giving up. Unset: m + 1.
  std::optional<int> max_iterations;
  /// Remove every near-origin eigenvalue in one reconformation. When false,
  /// l is lowered by one per pass instead.
  bool batch_origin_removal = true;

  /// Effective t for a given series.
  [[nodiscard]] double digits_for(const PowerSeries& s) const;
  void validate() const;
};

/// Why a pass through the loop ended.
enum class PassOutcome {
  kNoiseFiltered,   ///< singular values below 10^-t, l lowered by n_s
  kRankDeficient,   ///< reduced eigenproblem could not be factored
  kOriginPoles,     ///< eigenvalues inside origin_radius were dropped
  kDMatrix,         ///< Vandermonde matrix numerically singular
  kAccepted,
  kZeroSeries,      ///< Hankel matrix identically zero
};

std::string to_string(PassOutcome outcome);

struct IterationRecord {
  int l_before = 0;
  std::vector<double> singular_values;
  int n_s_removed = 0;
  PassOutcome outcome = PassOutcome::kAccepted;
};

struct SpuriousPoleReport {
  std::vector<IterationRecord> iterations;
  std::vector<Complex> origin_poles_removed;
  int d_matrix_reductions = 0;
  int final_l = 0;
  /// Defect estimate 2 (m - final_l).
  int defect_estimate = 0;
  /// Every pole was removed and only the polynomial head survives.
  bool collapsed = false;
  double t = kDefaultFilterDigits;
};

/// Number of entries with sigma[i] < 10^-t * sigma[0]. When sigma[0] is zero
/// every entry but the first counts as filtered.
int count_filtered(std::span<const double> sigma, double t);

/// Poles of the reduced pencil built from the right singular vectors of the
/// combined Hankel matrix. Only the l leading (signal) rows of V^H take part:
/// V1 and V2 are their first and last l columns, and the poles are the
/// eigenvalues of V2^-1 V1 computed through QR.
std::vector<Complex> reduced_poles(const CMatrix& combined,
                                   const numerics::SvdResult& svd);

struct Pm2Result {
  PoleResidueForm prf;
  RationalApproximant rational;
  SpuriousPoleReport report;
};

/// Matrix pencil Pade approximant with spurious pole removal and
/// least-squares assimilation of the surplus coefficients.
///
/// k is held fixed; the pole count l falls from m until no singular value of
/// the Hankel matrix is below 10^-t relative, no eigenvalue lies within
/// origin_radius of 0 and the Vandermonde system is well conditioned.
/// Throws Collapse if every pole is removed for k < 0, NonTerminating if
/// max_iterations passes are exhausted.
Pm2Result pm2(const PowerSeries& s, const Conformation& conf,
              const FilterParams& params = {});

}  // namespace padepm
