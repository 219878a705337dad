#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svt2d/matrix.hpp"
#include "svt2d/spin.hpp"
#include "svt2d/svt.hpp"

namespace svt2d {

/// F = 1 - ||m_tot - m_red||_F^2 / ||m_tot||_F^2. Not clamped.
double fidelity(const Matrix& m_tot, const Matrix& m_red);

/// Singular values in descending order.
Vector singular_spectrum(const Matrix& m);

enum class FidelityDomain { kTime, kFrequency };

struct SweepConfig {
  std::vector<double> fractions;
  std::vector<double> taus;
  int repeats = 128;
  std::uint64_t base_seed = 0;
  double noise_sigma = 0.0;  // additive Gaussian std in units of the data RMS
  FidelityDomain domain = FidelityDomain::kFrequency;
  EseemGrid grid;  // dwell times for the frequency-domain fidelity

  void validate() const;
};

struct RepeatOutcome {
  int repeat = 0;
  std::uint64_t seed = 0;  // mask seed for this repeat
  double fidelity_time = 0.0;
  double fidelity_freq = 0.0;
  int iterations = 0;
  bool converged = false;
  bool failed = false;  // solver abort; excluded from the aggregates
  std::string error;
};

struct SweepRecord {
  double fraction = 0.0;
  double tau = 0.0;
  std::vector<RepeatOutcome> repeats;
  // Aggregates over non-failed repeats; mean_fidelity/std_fidelity follow the
  // configured FidelityDomain.
  double mean_fidelity = 0.0;
  double std_fidelity = 0.0;
  double mean_fidelity_time = 0.0;
  double std_fidelity_time = 0.0;
  double mean_fidelity_freq = 0.0;
  double std_fidelity_freq = 0.0;
  double mean_iterations = 0.0;
  int converged_count = 0;
};

/// One record per fraction in config.fractions, params.tau fixed. For repeat
/// r of fraction index f: mask seed = derive_seed(base_seed, {kMaskStream, f,
/// r}), noise seed = derive_seed(base_seed, {kNoiseStream, f, r}); mask,
/// project, add noise on the observed entries, complete, score against m_tot
/// in both domains. Repeats run in parallel (jobs) with results identical to
/// sequential execution. Solver aborts become failed RepeatOutcomes.
std::vector<SweepRecord> sweep_sampling_fraction(const Matrix& m_tot,
                                                 const SweepConfig& config,
                                                 const SvtParams& params,
                                                 int jobs = 1);

/// Grid over config.taus x config.fractions. Masks and noise depend only on
/// (fraction index, repeat), so different taus see identical data.
std::vector<SweepRecord> sweep_tau(const Matrix& m_tot,
                                   const SweepConfig& config,
                                   const SvtParams& params_base, int jobs = 1);

}  // namespace svt2d
