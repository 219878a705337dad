#include "svt2d/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace svt2d {

namespace {

// Make the largest-magnitude entry of each column of U real and positive.
// The same unit factor multiplies the matching column of V, so
// U * diag(s) * V^H is unchanged. Ties resolve to the first maximum, which
// keeps the factorization deterministic.
template <typename Mat>
void fix_column_signs(Mat& u, Mat& v) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index k = u.cols() < v.cols() ? u.cols() : v.cols();
  for (Eigen::Index c = 0; c < k; ++c) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const double mag = std::abs(u(i, c));
      if (mag > best) {
        best = mag;
        imax = i;
      }
    }
    if (best == 0.0) continue;
    if constexpr (std::is_same_v<Scalar, double>) {
      if (u(imax, c) < 0.0) {
        u.col(c) = -u.col(c);
        v.col(c) = -v.col(c);
      }
    } else {
      const Scalar phase = u(imax, c) / std::abs(u(imax, c));
      const Scalar factor = std::conj(phase);
      u.col(c) *= factor;
      v.col(c) *= factor;
    }
  }
}

template <typename Mat, typename Fact>
Fact svd_impl(const Mat& a, const char* what) {
  require_finite(a, what);
  if (a.rows() < 1 || a.cols() < 1) {
    throw std::invalid_argument("svd: matrix must be at least 1x1");
  }
  Eigen::BDCSVD<Mat> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Fact f;
  f.u = solver.matrixU();
  f.singular_values = solver.singularValues();
  f.v = solver.matrixV();
  fix_column_signs(f.u, f.v);
  return f;
}

}  // namespace

SvdFactorization svd(const Matrix& a) {
  return svd_impl<Matrix, SvdFactorization>(a, "svd");
}

SvdFactorizationC svd(const CMatrix& a) {
  return svd_impl<CMatrix, SvdFactorizationC>(a, "svd");
}

Matrix shrink(const Matrix& a, double tau) {
  if (!(tau >= 0.0)) {
    throw std::invalid_argument("shrink: tau must be non-negative");
  }
  const SvdFactorization f = svd(a);
  Eigen::Index rank = 0;
  while (rank < f.singular_values.size() && f.singular_values(rank) > tau) {
    ++rank;
  }
  if (rank == 0) {
    return Matrix::Zero(a.rows(), a.cols());
  }
  const Vector kept =
      f.singular_values.head(rank).array() - tau;
  return f.u.leftCols(rank) * kept.asDiagonal() *
         f.v.leftCols(rank).transpose();
}

double frobenius_norm(const Matrix& a) {
  require_finite(a, "frobenius_norm");
  return a.norm();
}

double frobenius_norm(const CMatrix& a) {
  require_finite(a, "frobenius_norm");
  return a.norm();
}

double spectral_norm(const Matrix& a) {
  require_finite(a, "spectral_norm");
  Eigen::BDCSVD<Matrix> solver(a);
  return solver.singularValues()(0);
}

double nuclear_norm(const Matrix& a) {
  require_finite(a, "nuclear_norm");
  Eigen::BDCSVD<Matrix> solver(a);
  return solver.singularValues().sum();
}

}  // namespace svt2d
