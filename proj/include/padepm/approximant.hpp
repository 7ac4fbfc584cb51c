#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "padepm/baseline.hpp"
#include "padepm/pencil.hpp"

namespace padepm {

/// Throws PoleHit when |denom(z)| <= 1e-300.
Complex eval_rational(const RationalApproximant& ra, Complex z);

/// Throws PoleHit when z sits on a pole.
Complex eval_pole_residue(const PoleResidueForm& prf, Complex z);

struct PolesAndZeros {
  std::vector<Complex> poles;
  std::vector<Complex> zeros;
};

/// Roots of the denominator and numerator. A zero numerator is an error
/// (AllZero), not an empty zero list.
PolesAndZeros poles_and_zeros(const RationalApproximant& ra);

/// Lattice points (i h, j h) inside the closed unit disk, origin included.
/// Ordered by i, then j.
std::vector<Complex> unit_disk_mesh(double spacing);

/// n points evenly spaced on [a, b].
std::vector<double> linspace(double a, double b, int n);
/// n points evenly spaced in log10 on [a, b], a > 0.
std::vector<double> logspace(double a, double b, int n);
std::vector<Complex> on_real_axis(const std::vector<double>& xs);

using ComplexFn = std::function<Complex(Complex)>;

/// Pointwise |approx(z) - exact(z)|. Points where approx throws PoleHit carry
/// an infinite error and are flagged.
struct ErrorSweep {
  std::vector<Complex> points;
  std::vector<double> errors;
  std::vector<bool> flagged;
  double max_error = 0.0;
  Complex argmax_point{};

  /// Largest error over unflagged points (0 when all are flagged).
  [[nodiscard]] double finite_max() const;
  [[nodiscard]] int flagged_count() const;
};

/// Reference implementation, one point at a time.
ErrorSweep error_sweep_serial(const ComplexFn& approx, const ComplexFn& exact,
                              const std::vector<Complex>& points);

/// OpenMP version; results are merged by index and match the serial sweep
/// exactly.
ErrorSweep error_sweep(const ComplexFn& approx, const ComplexFn& exact,
                       const std::vector<Complex>& points);

/// CSV with header re,im,error,flagged.
void write_sweep_csv(std::ostream& os, const ErrorSweep& sweep);

ComplexFn as_function(const RationalApproximant& ra);
ComplexFn as_function(const PoleResidueForm& prf);

}  // namespace padepm
