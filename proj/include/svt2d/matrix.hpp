#pragma once

#include <Eigen/Core>
#include <complex>

namespace svt2d {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

/// Throws std::invalid_argument naming `what` and the first non-finite entry
/// in row-major order.
void require_finite(const Matrix& a, const char* what);
void require_finite(const CMatrix& a, const char* what);

}  // namespace svt2d
