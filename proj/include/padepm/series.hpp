#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "padepm/types.hpp"

namespace padepm {

/// Decimal digits assumed accurate when a series does not declare its own.
inline constexpr double kMachineDigits = 15.0;

/// Truncated Maclaurin series c_0 + c_1 z + ... + c_{n-1} z^{n-1}.
///
/// The coefficient list is never empty and every entry is finite. A series
/// may declare how many decimal digits of its coefficients are trustworthy;
/// the spurious-pole filter uses that figure as its threshold.
class PowerSeries {
 public:
  explicit PowerSeries(Coeffs coeffs,
                       std::optional<double> accurate_digits = std::nullopt);

  [[nodiscard]] const Coeffs& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(coeffs_.size());
  }
  [[nodiscard]] const Complex& operator[](int i) const { return coeffs_[i]; }

  /// c_j, with the convention c_j = 0 for j < 0.
  [[nodiscard]] Complex at_or_zero(int j) const {
    return j < 0 ? Complex{} : coeffs_.at(static_cast<std::size_t>(j));
  }

  [[nodiscard]] double accurate_digits() const noexcept {
    return declared_digits_.value_or(kMachineDigits);
  }
  [[nodiscard]] const std::optional<double>& declared_digits() const noexcept {
    return declared_digits_;
  }

 private:
  Coeffs coeffs_;
  std::optional<double> declared_digits_;
};

/// Horner evaluation of the truncated series.
Complex eval_truncated(const PowerSeries& s, Complex z);

/// Seedable random stream for noise generation.
///
/// Engine: std::mt19937_64 (fully specified by the standard). Uniform draws
/// on [-1, 1] are formed as 2u - 1 with u = (x >> 11) * 2^-53, so results do
/// not depend on the standard library's distribution implementation.
class NoiseRng {
 public:
  explicit NoiseRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw on [-1, 1).
  double symmetric_uniform();

  /// Seed derived from (master, a, b) with splitmix64 mixing, so that the
  /// stream for (a, b) does not depend on how many other pairs exist.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                   std::uint64_t b);

 private:
  std::mt19937_64 engine_;
};

/// Noisy geometric series: c_i = 1 + eps * r_i, r_i uniform on [-1, 1].
/// Accurate digits are -log10(eps) when eps > 0.
PowerSeries gen_geometric_noisy(int n, double eps, NoiseRng& rng);

/// Maclaurin series of log(1.2 - z).
PowerSeries gen_log_series(int n);

/// Exact series of sum_j w_j / (1 - z / p_j): c_i = sum_j w_j p_j^-i.
PowerSeries gen_from_poles(std::span<const Complex> poles,
                           std::span<const Complex> weights, int n);

/// 1 + eps z + z^2.
PowerSeries gen_quadratic_eps(double eps);

}  // namespace padepm
