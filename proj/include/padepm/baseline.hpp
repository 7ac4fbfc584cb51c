#pragma once

#include "padepm/series.hpp"
#include "padepm/types.hpp"

namespace padepm {

/// Shape of an [m+k / m] approximant plus the working pole count l.
///
/// The numerator has degree m+k, the denominator degree m, and the
/// approximant consumes n = 2m+k+1 coefficients. l starts at m and is only
/// lowered by the spurious-pole filter.
struct Conformation {
  int m = 0;
  int k = -1;
  int l = 0;

  /// Validates m >= 0, m+k >= 0 and 1 <= l <= m. A negative l means l = m.
  static Conformation make(int m, int k, int l = -1);

  [[nodiscard]] int required_terms() const noexcept { return 2 * m + k + 1; }
  [[nodiscard]] int numerator_degree() const noexcept { return m + k; }

  /// Throws InsufficientCoefficients if s is shorter than required_terms().
  void require_terms(const PowerSeries& s) const;
};

/// numer(z) / denom(z), both stored low order first.
struct RationalApproximant {
  Coeffs numer;
  Coeffs denom;
};

/// Direct Method: b_0 = 1 and b_1..b_m from the m x m Toeplitz system.
/// Throws DegenerateError when partial-pivot LU meets a pivot that is zero to
/// working precision.
Coeffs dm_denominator(const PowerSeries& s, const Conformation& conf);

/// Null vector of the m x (m+1) coefficient matrix, taken from the last
/// right singular vector and scaled so its largest-magnitude entry is 1.
Coeffs svd_denominator(const PowerSeries& s, const Conformation& conf);

/// a_j = sum_i c_{j-i} b_i for j = 0..m+k.
Coeffs numerator_from_denominator(const PowerSeries& s, const Coeffs& denom,
                                  const Conformation& conf);

RationalApproximant dm(const PowerSeries& s, const Conformation& conf);
RationalApproximant svd_pade(const PowerSeries& s, const Conformation& conf);

/// Rescales a denominator (and optionally its numerator) so that b_0 = 1.
/// Leaves the input untouched when b_0 == 0.
void normalize_b0(Coeffs& denom, Coeffs* numer = nullptr);

}  // namespace padepm
