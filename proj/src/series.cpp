#include "padepm/series.hpp"

#include <cmath>
#include <string>

#include "padepm/errors.hpp"

namespace padepm {

PowerSeries::PowerSeries(Coeffs coeffs, std::optional<double> accurate_digits)
    : coeffs_(std::move(coeffs)), declared_digits_(accurate_digits) {
  if (coeffs_.empty()) {
    throw InvalidArgument("power series needs at least one coefficient");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i].real()) || !std::isfinite(coeffs_[i].imag())) {
      throw InvalidArgument("coefficient " + std::to_string(i) +
                            " is not finite");
    }
  }
  if (declared_digits_ && !(*declared_digits_ > 0.0)) {
    throw InvalidArgument("accurate digits must be positive");
  }
}

Complex eval_truncated(const PowerSeries& s, Complex z) {
  const auto& c = s.coeffs();
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

double NoiseRng::symmetric_uniform() {
  const std::uint64_t bits = engine_() >> 11;
  const double u = static_cast<double>(bits) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_length(int n) {
  if (n < 1) throw InvalidArgument("series length must be at least 1");
}

}  // namespace

std::uint64_t NoiseRng::derive_seed(std::uint64_t master, std::uint64_t a,
                                    std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ b);
}

PowerSeries gen_geometric_noisy(int n, double eps, NoiseRng& rng) {
  require_length(n);
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("noise level must be finite and nonnegative");
  }
  Coeffs c(static_cast<std::size_t>(n));
  for (auto& ci : c) {
    ci = 1.0 + eps * rng.symmetric_uniform();
  }
  std::optional<double> digits;
  if (eps > 0.0) digits = -std::log10(eps);
  return PowerSeries(std::move(c), digits);
}

PowerSeries gen_log_series(int n) {
  require_length(n);
  Coeffs c(static_cast<std::size_t>(n));
  c[0] = std::log(1.2);
  for (int i = 1; i < n; ++i) {
    c[i] = -1.0 / (i * std::pow(1.2, i));
  }
  return PowerSeries(std::move(c));
}

PowerSeries gen_from_poles(std::span<const Complex> poles,
                           std::span<const Complex> weights, int n) {
  require_length(n);
  if (poles.empty() || poles.size() != weights.size()) {
    throw InvalidArgument("need matching, nonempty pole and weight lists");
  }
  std::vector<Complex> inv(poles.size());
  for (std::size_t j = 0; j < poles.size(); ++j) {
    if (poles[j] == Complex{}) throw ZeroPole("pole at the origin");
    if (!std::isfinite(std::abs(poles[j]))) {
      throw InvalidArgument("pole is not finite");
    }
    for (std::size_t q = 0; q < j; ++q) {
      if (poles[q] == poles[j]) throw InvalidArgument("poles must be distinct");
    }
    inv[j] = 1.0 / poles[j];
  }
  Coeffs c(static_cast<std::size_t>(n));
  std::vector<Complex> power(weights.begin(), weights.end());
  for (int i = 0; i < n; ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < power.size(); ++j) {
      sum += power[j];
      power[j] *= inv[j];
    }
    c[i] = sum;
  }
  return PowerSeries(std::move(c));
}

PowerSeries gen_quadratic_eps(double eps) {
  return PowerSeries(Coeffs{1.0, eps, 1.0});
}

}  // namespace padepm
