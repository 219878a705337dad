#include "svt2d/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "svt2d/errors.hpp"
#include "svt2d/linalg.hpp"
#include "svt2d/rng.hpp"
#include "svt2d/spectral.hpp"

namespace svt2d {

double fidelity(const Matrix& m_tot, const Matrix& m_red) {
  require_finite(m_tot, "fidelity: reference");
  require_finite(m_red, "fidelity: reconstruction");
  if (m_tot.rows() != m_red.rows() || m_tot.cols() != m_red.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const double ref = m_tot.squaredNorm();
  if (ref == 0.0) {
    throw std::invalid_argument("fidelity: reference matrix is zero");
  }
  return 1.0 - (m_tot - m_red).squaredNorm() / ref;
}

Vector singular_spectrum(const Matrix& m) {
  require_finite(m, "singular_spectrum");
  Eigen::BDCSVD<Matrix> solver(m);
  return solver.singularValues();
}

void SweepConfig::validate() const {
  if (fractions.empty()) {
    throw std::invalid_argument("sweep: fractions list is empty");
  }
  for (double f : fractions) {
    if (!(f > 0.0) || f > 1.0) {
      throw std::invalid_argument("sweep: fractions must lie in (0, 1]");
    }
  }
  for (double t : taus) {
    if (!(t > 0.0)) {
      throw std::invalid_argument("sweep: taus must be positive");
    }
  }
  if (repeats < 1) {
    throw std::invalid_argument("sweep: repeats must be at least 1");
  }
  if (noise_sigma < 0.0) {
    throw std::invalid_argument("sweep: noise_sigma must be non-negative");
  }
  grid.validate();
}

namespace {

struct CellSpec {
  double fraction = 0.0;
  double tau = 0.0;
  int fraction_index = 0;
};

// Mean and standard deviation (N-1 normalization; 0 for a single value).
void mean_std(const std::vector<double>& values, double& mean, double& std) {
  mean = 0.0;
  std = 0.0;
  if (values.empty()) return;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return;
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  std = std::sqrt(acc / static_cast<double>(values.size() - 1));
}

std::vector<SweepRecord> run_sweep(const Matrix& m_tot,
                                   const SweepConfig& config,
                                   const SvtParams& params_base,
                                   const std::vector<CellSpec>& cells,
                                   int jobs) {
  config.validate();
  require_finite(m_tot, "sweep: ground truth");
  if (m_tot.rows() != config.grid.n1 || m_tot.cols() != config.grid.n2) {
    throw std::invalid_argument("sweep: ground truth does not match the grid");
  }
  const int rows = static_cast<int>(m_tot.rows());
  const int cols = static_cast<int>(m_tot.cols());
  const double rms =
      m_tot.norm() / std::sqrt(static_cast<double>(m_tot.size()));
  const Matrix mag_tot = magnitude(dft2(m_tot, config.grid));

  std::vector<SweepRecord> records(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    records[c].fraction = cells[c].fraction;
    records[c].tau = cells[c].tau;
    records[c].repeats.resize(config.repeats);
  }

  const std::int64_t n_tasks =
      static_cast<std::int64_t>(cells.size()) * config.repeats;
  detail::parallel_for(n_tasks, jobs, [&](std::int64_t task) {
    const std::size_t c = static_cast<std::size_t>(task / config.repeats);
    const int r = static_cast<int>(task % config.repeats);
    const CellSpec& cell = cells[c];
    RepeatOutcome& outcome = records[c].repeats[r];
    outcome.repeat = r;

    const std::uint64_t f_idx = static_cast<std::uint64_t>(cell.fraction_index);
    const std::uint64_t rep = static_cast<std::uint64_t>(r);
    const std::uint64_t mask_seed =
        derive_seed(config.base_seed, {kMaskStream, f_idx, rep});
    outcome.seed = mask_seed;

    try {
      const SampleMask mask =
          generate_uniform_mask(rows, cols, cell.fraction, mask_seed);
      Matrix observed = project(m_tot, mask);
      if (config.noise_sigma > 0.0) {
        Rng noise(derive_seed(config.base_seed, {kNoiseStream, f_idx, rep}));
        for (std::int64_t f : mask.flat) {
          const int i = static_cast<int>(f / mask.cols);
          const int j = static_cast<int>(f % mask.cols);
          observed(i, j) += config.noise_sigma * rms * noise.gaussian();
        }
      }
      SvtParams params = params_base;
      params.tau = cell.tau;
      params.store_history = false;
      const SvtResult res = svt_complete(observed, mask, params);
      outcome.iterations = res.iterations;
      outcome.converged = res.converged;
      outcome.fidelity_time = fidelity(m_tot, res.completed);
      outcome.fidelity_freq =
          fidelity(mag_tot, magnitude(dft2(res.completed, config.grid)));
    } catch (const NumericError& e) {
      outcome.failed = true;
      outcome.error = e.what();
    }
  });

  for (SweepRecord& rec : records) {
    std::vector<double> f_time, f_freq, iters;
    for (const RepeatOutcome& o : rec.repeats) {
      if (o.failed) continue;
      f_time.push_back(o.fidelity_time);
      f_freq.push_back(o.fidelity_freq);
      iters.push_back(static_cast<double>(o.iterations));
      if (o.converged) ++rec.converged_count;
    }
    mean_std(f_time, rec.mean_fidelity_time, rec.std_fidelity_time);
    mean_std(f_freq, rec.mean_fidelity_freq, rec.std_fidelity_freq);
    double unused;
    mean_std(iters, rec.mean_iterations, unused);
    if (config.domain == FidelityDomain::kTime) {
      rec.mean_fidelity = rec.mean_fidelity_time;
      rec.std_fidelity = rec.std_fidelity_time;
    } else {
      rec.mean_fidelity = rec.mean_fidelity_freq;
      rec.std_fidelity = rec.std_fidelity_freq;
    }
  }
  return records;
}

}  // namespace

std::vector<SweepRecord> sweep_sampling_fraction(const Matrix& m_tot,
                                                 const SweepConfig& config,
                                                 const SvtParams& params,
                                                 int jobs) {
  params.validate();
  std::vector<CellSpec> cells;
  cells.reserve(config.fractions.size());
  for (std::size_t f = 0; f < config.fractions.size(); ++f) {
    cells.push_back({config.fractions[f], params.tau, static_cast<int>(f)});
  }
  return run_sweep(m_tot, config, params, cells, jobs);
}

std::vector<SweepRecord> sweep_tau(const Matrix& m_tot,
                                   const SweepConfig& config,
                                   const SvtParams& params_base, int jobs) {
  if (config.taus.empty()) {
    throw std::invalid_argument("sweep_tau: taus list is empty");
  }
  std::vector<CellSpec> cells;
  cells.reserve(config.taus.size() * config.fractions.size());
  // Cells vary tau fastest so records group by tau within each fraction;
  // seeds depend only on the fraction index, so every tau sees the same data.
  for (std::size_t f = 0; f < config.fractions.size(); ++f) {
    for (double tau : config.taus) {
      cells.push_back({config.fractions[f], tau, static_cast<int>(f)});
    }
  }
  return run_sweep(m_tot, config, params_base, cells, jobs);
}

}  // namespace svt2d
