#pragma once

#include "svt2d/matrix.hpp"

namespace svt2d {

/// Thin SVD A = U * diag(singular_values) * V^T (V^H for complex A).
/// Singular values are non-increasing and non-negative. Columns are
/// sign-fixed so that the largest-magnitude entry of each column of U is
/// real and positive, which makes the factors reproducible.
struct SvdFactorization {
  Matrix u;
  Vector singular_values;
  Matrix v;
};

struct SvdFactorizationC {
  CMatrix u;
  Vector singular_values;
  CMatrix v;
};

SvdFactorization svd(const Matrix& a);
SvdFactorizationC svd(const CMatrix& a);

/// Singular value soft-thresholding: U * diag(max(sigma_i - tau, 0)) * V^T.
/// The result's rank equals the number of singular values above tau.
Matrix shrink(const Matrix& a, double tau);

double frobenius_norm(const Matrix& a);
double frobenius_norm(const CMatrix& a);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/// Sum of singular values (trace norm).
double nuclear_norm(const Matrix& a);

}  // namespace svt2d
