#include "padepm/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "padepm/errors.hpp"
#include "padepm/numerics.hpp"

namespace padepm {

Conformation Conformation::make(int m, int k, int l) {
  if (m < 0) throw InvalidArgument("denominator degree m must be >= 0");
  if (m + k < 0) throw InvalidArgument("numerator degree m+k must be >= 0");
  if (l < 0) l = m;
  if (m == 0 && l != 0) throw InvalidArgument("l must be 0 when m = 0");
  if (m > 0 && (l < 1 || l > m)) {
    throw InvalidArgument("pencil size l must satisfy 1 <= l <= m");
  }
  return Conformation{m, k, l};
}

void Conformation::require_terms(const PowerSeries& s) const {
  if (s.size() < required_terms()) {
    throw InsufficientCoefficients(
        "[" + std::to_string(m + k) + "/" + std::to_string(m) + "] needs " +
        std::to_string(required_terms()) + " coefficients, series has " +
        std::to_string(s.size()));
  }
}

Coeffs dm_denominator(const PowerSeries& s, const Conformation& conf) {
  conf.require_terms(s);
  const int m = conf.m;
  const int k = conf.k;
  if (m == 0) return {Complex{1.0}};

  // Row i, column j (1-based): c_{m+k+i-j} b_j = -c_{m+k+i}.
  CMatrix a(m, m);
  CVector rhs(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) a(i - 1, j - 1) = s.at_or_zero(m + k + i - j);
    rhs(i - 1) = -s.at_or_zero(m + k + i);
  }

  const double amax = a.cwiseAbs().maxCoeff();
  Eigen::PartialPivLU<CMatrix> lu(a);
  const auto& packed = lu.matrixLU();
  for (int i = 0; i < m; ++i) {
    if (std::abs(packed(i, i)) <= std::numeric_limits<double>::epsilon() * amax) {
      throw DegenerateError("direct method: coefficient matrix is singular "
                            "(degenerate [" + std::to_string(m + k) + "/" +
                            std::to_string(m) + "] conformation)");
    }
  }
  const CVector b = lu.solve(rhs);

  Coeffs out(static_cast<std::size_t>(m) + 1);
  out[0] = 1.0;
  for (int j = 0; j < m; ++j) out[j + 1] = b(j);
  return out;
}

Coeffs svd_denominator(const PowerSeries& s, const Conformation& conf) {
  conf.require_terms(s);
  const int m = conf.m;
  const int k = conf.k;
  if (m == 0) return {Complex{1.0}};

  CMatrix c(m, m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= m; ++j) c(i, j) = s.at_or_zero(m + k + 1 + i - j);
  }
  const auto dec = numerics::svd(c);
  // Null vector = last column of V = conjugate of the last row of V^H.
  Coeffs b(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) b[j] = std::conj(dec.vh(m, j));

  const auto big = std::max_element(b.begin(), b.end(), [](Complex x, Complex y) {
    return std::abs(x) < std::abs(y);
  });
  const Complex scale = *big;
  for (auto& bj : b) bj /= scale;
  *big = 1.0;
  return b;
}

Coeffs numerator_from_denominator(const PowerSeries& s, const Coeffs& denom,
                                  const Conformation& conf) {
  conf.require_terms(s);
  if (static_cast<int>(denom.size()) != conf.m + 1) {
    throw InvalidArgument("denominator length must be m+1");
  }
  const int deg = conf.m + conf.k;
  Coeffs a(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) {
    Complex sum{};
    for (int i = 0; i <= std::min(j, conf.m); ++i) sum += s[j - i] * denom[i];
    a[j] = sum;
  }
  return a;
}

RationalApproximant dm(const PowerSeries& s, const Conformation& conf) {
  auto b = dm_denominator(s, conf);
  auto a = numerator_from_denominator(s, b, conf);
  return {std::move(a), std::move(b)};
}

RationalApproximant svd_pade(const PowerSeries& s, const Conformation& conf) {
  auto b = svd_denominator(s, conf);
  auto a = numerator_from_denominator(s, b, conf);
  return {std::move(a), std::move(b)};
}

void normalize_b0(Coeffs& denom, Coeffs* numer) {
  if (denom.empty() || denom[0] == Complex{}) return;
  const Complex b0 = denom[0];
  for (auto& b : denom) b /= b0;
  denom[0] = 1.0;
  if (numer != nullptr) {
    for (auto& a : *numer) a /= b0;
  }
}

}  // namespace padepm
