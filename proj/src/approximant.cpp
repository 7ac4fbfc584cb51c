#include "padepm/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "padepm/errors.hpp"
#include "padepm/numerics.hpp"

namespace padepm {

namespace {

Complex horner(const Coeffs& p, Complex z) {
  Complex acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

constexpr double kPoleHitFloor = 1e-300;

}  // namespace

Complex eval_rational(const RationalApproximant& ra, Complex z) {
  const Complex den = horner(ra.denom, z);
  if (std::abs(den) <= kPoleHitFloor) {
    throw PoleHit("denominator vanishes at evaluation point");
  }
  return horner(ra.numer, z) / den;
}

Complex eval_pole_residue(const PoleResidueForm& prf, Complex z) {
  Complex tail{};
  for (const auto& t : prf.terms) {
    if (t.pole == Complex{}) {
      if (z == Complex{}) throw PoleHit("evaluation at a pole at the origin");
      continue;
    }
    const Complex den = 1.0 - z / t.pole;
    if (std::abs(den) <= kPoleHitFloor) throw PoleHit("evaluation at a pole");
    tail += t.weight / den;
  }
  Complex zs{1.0};
  for (int i = 0; i < prf.shift; ++i) zs *= z;
  return horner(prf.head, z) + zs * tail;
}

PolesAndZeros poles_and_zeros(const RationalApproximant& ra) {
  return {numerics::polynomial_roots(ra.denom),
          numerics::polynomial_roots(ra.numer)};
}

std::vector<Complex> unit_disk_mesh(double spacing) {
  if (!(spacing > 0.0 && spacing <= 1.0)) {
    throw InvalidArgument("mesh spacing must lie in (0, 1]");
  }
  const int reach = static_cast<int>(std::floor(1.0 / spacing + 1e-9));
  std::vector<Complex> pts;
  for (int i = -reach; i <= reach; ++i) {
    for (int j = -reach; j <= reach; ++j) {
      const double x = i * spacing;
      const double y = j * spacing;
      if (x * x + y * y <= 1.0 + 1e-12) pts.emplace_back(x, y);
    }
  }
  return pts;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw InvalidArgument("linspace needs n >= 1");
  if (n == 1) return {a};
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

std::vector<double> logspace(double a, double b, int n) {
  if (!(a > 0.0 && b > 0.0)) throw InvalidArgument("logspace needs a, b > 0");
  auto xs = linspace(std::log10(a), std::log10(b), n);
  for (auto& x : xs) x = std::pow(10.0, x);
  xs.front() = a;
  xs.back() = b;
  return xs;
}

std::vector<Complex> on_real_axis(const std::vector<double>& xs) {
  return {xs.begin(), xs.end()};
}

double ErrorSweep::finite_max() const {
  double best = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!flagged[i]) best = std::max(best, errors[i]);
  }
  return best;
}

int ErrorSweep::flagged_count() const {
  return static_cast<int>(std::count(flagged.begin(), flagged.end(), true));
}

namespace {

struct PointError {
  double error;
  bool flagged;
};

PointError point_error(const ComplexFn& approx, const ComplexFn& exact, Complex z) {
  try {
    const double e = std::abs(approx(z) - exact(z));
    if (std::isnan(e)) return {std::numeric_limits<double>::infinity(), true};
    return {e, false};
  } catch (const PoleHit&) {
    return {std::numeric_limits<double>::infinity(), true};
  }
}

ErrorSweep assemble(const std::vector<Complex>& points, std::vector<PointError> pe) {
  ErrorSweep sweep;
  sweep.points = points;
  sweep.errors.resize(points.size());
  sweep.flagged.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    sweep.errors[i] = pe[i].error;
    sweep.flagged[i] = pe[i].flagged;
    if (i == 0 || pe[i].error > sweep.max_error) {
      sweep.max_error = pe[i].error;
      sweep.argmax_point = points[i];
    }
  }
  return sweep;
}

}  // namespace

ErrorSweep error_sweep_serial(const ComplexFn& approx, const ComplexFn& exact,
                              const std::vector<Complex>& points) {
  std::vector<PointError> pe(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    pe[i] = point_error(approx, exact, points[i]);
  }
  return assemble(points, std::move(pe));
}

ErrorSweep error_sweep(const ComplexFn& approx, const ComplexFn& exact,
                       const std::vector<Complex>& points) {
  std::vector<PointError> pe(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    pe[i] = point_error(approx, exact, points[i]);
  }
  return assemble(points, std::move(pe));
}

void write_sweep_csv(std::ostream& os, const ErrorSweep& sweep) {
  os << "re,im,error,flagged\n";
  char buf[128];
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n",
                  sweep.points[i].real(), sweep.points[i].imag(),
                  sweep.errors[i], sweep.flagged[i] ? 1 : 0);
    os << buf;
  }
}

ComplexFn as_function(const RationalApproximant& ra) {
  return [ra](Complex z) { return eval_rational(ra, z); };
}

ComplexFn as_function(const PoleResidueForm& prf) {
  return [prf](Complex z) { return eval_pole_residue(prf, z); };
}

}  // namespace padepm
