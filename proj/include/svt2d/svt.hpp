#pragma once

#include <cstdint>
#include <vector>

#include "svt2d/matrix.hpp"
#include "svt2d/sampling.hpp"

namespace svt2d {

struct SvtParams {
  double tau = 0.0;           // soft-threshold
  double delta = 1.2;         // step size; < 2 for provable convergence
  double epsilon = 1e-4;      // stopping tolerance on the masked residual
  int max_iterations = 5000;
  bool store_history = false;
  // Y0 = k0 * delta * P(M) with k0 = ceil(tau / (delta * ||P(M)||_2)); skips
  // the leading run of all-zero shrink iterates. Set false for a plain Y0 = 0.
  bool kickstart = true;
  // delta >= 2 is outside the provably convergent regime and is rejected
  // unless this override is set.
  bool allow_nonconvergent_delta = false;

  void validate() const;
};

struct SvtResult {
  Matrix completed;
  int iterations = 0;
  std::vector<double> residual_history;  // filled iff store_history
  bool converged = false;
  int final_rank = 0;  // singular values above tau at the last shrink
};

/// Iterates X = shrink(Y, tau); Y += delta * P_Omega(observed - X) until the
/// masked relative residual drops below epsilon or the iteration cap is hit.
/// `observed` must be exactly zero off the mask. Throws NumericError if an
/// iterate goes non-finite or the residual exceeds the divergence guard (1e6).
SvtResult svt_complete(const Matrix& observed, const SampleMask& mask,
                       const SvtParams& params);

/// ||P_Omega(X - observed)||_F / ||P_Omega(observed)||_F.
double residual(const Matrix& x, const Matrix& observed,
                const SampleMask& mask);

/// tau = 5 * max(rows, cols), delta = 1.2, epsilon = 1e-4, cap 5000.
SvtParams default_params(int rows, int cols, std::int64_t observed_count);

}  // namespace svt2d
