#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace padepm {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Coefficient lists are stored low order first: p[i] multiplies z^i.
using Coeffs = std::vector<Complex>;

}  // namespace padepm
