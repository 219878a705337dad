#pragma once

#include <string>
#include <vector>

#include "svt2d/config.hpp"

namespace svt2d {

/// Built-in experiment presets: "misaligned-14N", "onaxis-13C",
/// "lowrank-synthetic". The same documents are shipped as files under
/// presets/.
const std::vector<std::string>& preset_names();

/// Raw JSON text of a preset; throws ConfigError for unknown names.
const std::string& preset_json(const std::string& name);

RunConfig preset_config(const std::string& name);

}  // namespace svt2d
