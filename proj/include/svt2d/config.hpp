#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "svt2d/analysis.hpp"
#include "svt2d/spin.hpp"
#include "svt2d/svt.hpp"

namespace svt2d {

/// Parsed configuration document (strict JSON: unknown keys are errors, every
/// field optional with the documented default). Physical inputs use human
/// units (GHz, MHz, gauss, seconds); they are converted to angular
/// frequencies on load.
struct RunConfig {
  SpinSystem system;
  EseemGrid grid;
  SvtParams svt;  // svt.tau == 0 means "unset, apply the 5*max(n,m) rule"
  SweepConfig sweep;
  std::vector<CosinePeak> synthetic;  // non-empty -> synthetic signal source
  bool has_system = false;
};

RunConfig parse_config_file(const std::filesystem::path& path);

/// `origin` names the source in diagnostics (file name or "<preset>").
RunConfig parse_config_text(const std::string& text, const std::string& origin);

/// Ground-truth time-domain matrix: the synthetic cosine model when
/// `synthetic` is non-empty, otherwise the simulated ESEEM signal.
Matrix ground_truth(const RunConfig& config, int jobs = 1);

}  // namespace svt2d
