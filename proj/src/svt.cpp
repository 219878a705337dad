#include "svt2d/svt.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

#include "svt2d/errors.hpp"
#include "svt2d/linalg.hpp"

namespace svt2d {

namespace {
constexpr double kDivergenceGuard = 1e6;
}

void SvtParams::validate() const {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("svt: tau must be positive");
  }
  if (!(delta > 0.0)) {
    throw std::invalid_argument("svt: delta must be positive");
  }
  if (delta >= 2.0 && !allow_nonconvergent_delta) {
    throw std::invalid_argument(
        "svt: delta >= 2 is outside the convergent regime; set "
        "allow_nonconvergent_delta to override");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("svt: epsilon must be positive");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("svt: max_iterations must be positive");
  }
}

double residual(const Matrix& x, const Matrix& observed,
                const SampleMask& mask) {
  mask.validate();
  if (x.rows() != observed.rows() || x.cols() != observed.cols() ||
      x.rows() != mask.rows || x.cols() != mask.cols) {
    throw std::invalid_argument("residual: dimension mismatch");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::int64_t f : mask.flat) {
    const int i = static_cast<int>(f / mask.cols);
    const int j = static_cast<int>(f % mask.cols);
    const double d = x(i, j) - observed(i, j);
    num += d * d;
    den += observed(i, j) * observed(i, j);
  }
  if (den == 0.0) {
    throw std::invalid_argument(
        "residual: observed data is zero on the mask");
  }
  return std::sqrt(num / den);
}

SvtParams default_params(int rows, int cols, std::int64_t observed_count) {
  if (rows < 1 || cols < 1 || observed_count < 1) {
    throw std::invalid_argument("default_params: counts must be positive");
  }
  SvtParams p;
  p.tau = 5.0 * static_cast<double>(rows > cols ? rows : cols);
  p.delta = 1.2;
  p.epsilon = 1e-4;
  p.max_iterations = 5000;
  return p;
}

SvtResult svt_complete(const Matrix& observed, const SampleMask& mask,
                       const SvtParams& params) {
  params.validate();
  mask.validate();
  require_finite(observed, "svt_complete: observed");
  if (observed.rows() != mask.rows || observed.cols() != mask.cols) {
    throw std::invalid_argument("svt_complete: mask/matrix dimension mismatch");
  }

  // The caller must pass P_Omega(M), not the full matrix; anything nonzero
  // off the mask means the two were mixed up.
  {
    std::size_t pos = 0;
    const std::int64_t total =
        static_cast<std::int64_t>(mask.rows) * mask.cols;
    for (std::int64_t f = 0; f < total; ++f) {
      if (pos < mask.flat.size() && mask.flat[pos] == f) {
        ++pos;
        continue;
      }
      const int i = static_cast<int>(f / mask.cols);
      const int j = static_cast<int>(f % mask.cols);
      if (observed(i, j) != 0.0) {
        throw std::invalid_argument(
            "svt_complete: observed has a nonzero entry off the mask at (" +
            std::to_string(i) + ", " + std::to_string(j) +
            "); pass project(M, mask)");
      }
    }
  }

  double den = 0.0;
  for (std::int64_t f : mask.flat) {
    const int i = static_cast<int>(f / mask.cols);
    const int j = static_cast<int>(f % mask.cols);
    den += observed(i, j) * observed(i, j);
  }
  if (den == 0.0) {
    throw std::invalid_argument(
        "svt_complete: observed data is zero on the mask");
  }
  den = std::sqrt(den);

  Matrix y;
  if (params.kickstart) {
    const double top = spectral_norm(observed);
    const double k0 =
        top > 0.0 ? std::ceil(params.tau / (params.delta * top)) : 1.0;
    y = (k0 * params.delta) * observed;
  } else {
    y = Matrix::Zero(observed.rows(), observed.cols());
  }

  SvtResult result;
  if (params.store_history) {
    result.residual_history.reserve(64);
  }

  Matrix x;
  for (int k = 1; k <= params.max_iterations; ++k) {
    Eigen::BDCSVD<Matrix> solver(y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sigma = solver.singularValues();
    Eigen::Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > params.tau) {
      ++rank;
    }
    if (rank == 0) {
      x = Matrix::Zero(y.rows(), y.cols());
    } else {
      const Vector kept = sigma.head(rank).array() - params.tau;
      x.noalias() = solver.matrixU().leftCols(rank) * kept.asDiagonal() *
                    solver.matrixV().leftCols(rank).transpose();
    }
    result.iterations = k;
    result.final_rank = static_cast<int>(rank);

    double num = 0.0;
    for (std::int64_t f : mask.flat) {
      const int i = static_cast<int>(f / mask.cols);
      const int j = static_cast<int>(f % mask.cols);
      const double d = x(i, j) - observed(i, j);
      num += d * d;
    }
    const double res = std::sqrt(num) / den;
    if (!std::isfinite(res)) {
      throw NumericError("svt_complete: non-finite iterate at iteration " +
                         std::to_string(k));
    }
    if (params.store_history) {
      result.residual_history.push_back(res);
    }
    if (res < params.epsilon) {
      result.converged = true;
      break;
    }
    if (res > kDivergenceGuard) {
      throw NumericError("svt_complete: residual exceeded divergence guard (" +
                         std::to_string(res) + ") at iteration " +
                         std::to_string(k));
    }
    for (std::int64_t f : mask.flat) {
      const int i = static_cast<int>(f / mask.cols);
      const int j = static_cast<int>(f % mask.cols);
      y(i, j) += params.delta * (observed(i, j) - x(i, j));
    }
  }

  result.completed = std::move(x);
  return result;
}

}  // namespace svt2d
