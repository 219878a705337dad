#include "svt2d/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "svt2d/errors.hpp"

namespace svt2d {

namespace {

using nlohmann::json;
using constants::kTwoPi;

constexpr double kMHz = kTwoPi * 1e6;  // MHz -> rad/s
constexpr double kGHz = kTwoPi * 1e9;

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& what) {
  throw ConfigError(origin + ": " + (path.empty() ? "$" : path) + ": " + what);
}

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& origin, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const std::string& a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(origin, path, "unknown key '" + key + "'");
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& obj, const char* key, double fallback,
                  const std::string& origin, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number()) fail(origin, path + "." + key, "expected a number");
  return v->get<double>();
}

int get_int(const json& obj, const char* key, int fallback,
            const std::string& origin, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number_integer()) fail(origin, path + "." + key,
                                    "expected an integer");
  return v->get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback,
              const std::string& origin, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_boolean()) fail(origin, path + "." + key, "expected a boolean");
  return v->get<bool>();
}

Eigen::Vector3d get_vec3(const json& v, const std::string& origin,
                         const std::string& path) {
  if (!v.is_array() || v.size() != 3) {
    fail(origin, path, "expected an array of 3 numbers");
  }
  Eigen::Vector3d out;
  for (int k = 0; k < 3; ++k) {
    if (!v[k].is_number()) fail(origin, path, "expected an array of 3 numbers");
    out(k) = v[k].get<double>();
  }
  return out;
}

Eigen::Matrix3d get_mat3(const json& v, const std::string& origin,
                         const std::string& path) {
  if (!v.is_array() || v.size() != 3) {
    fail(origin, path, "expected a 3x3 array of numbers");
  }
  Eigen::Matrix3d out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_array() || v[i].size() != 3) {
      fail(origin, path, "expected a 3x3 array of numbers");
    }
    for (int j = 0; j < 3; ++j) {
      if (!v[i][j].is_number()) {
        fail(origin, path, "expected a 3x3 array of numbers");
      }
      out(i, j) = v[i][j].get<double>();
    }
  }
  return out;
}

void parse_system(const json& obj, SpinSystem& system,
                  const std::string& origin) {
  const std::string path = "system";
  check_keys(obj,
             {"d_ghz", "g", "field_gauss", "a_14n_mhz", "n14_nuclear_g",
              "n14_quadrupole_mhz", "c13"},
             origin, path);
  system.zero_field_splitting =
      get_number(obj, "d_ghz", 2.87, origin, path) * kGHz;
  system.g_factor = get_number(obj, "g", 2.003, origin, path);
  if (const json* v = find(obj, "field_gauss")) {
    system.field_gauss = get_vec3(*v, origin, path + ".field_gauss");
  }
  if (const json* v = find(obj, "a_14n_mhz")) {
    system.a_14n = get_mat3(*v, origin, path + ".a_14n_mhz") * kMHz;
  }
  system.n14_nuclear_g = get_number(obj, "n14_nuclear_g", 0.0, origin, path);
  system.n14_quadrupole =
      get_number(obj, "n14_quadrupole_mhz", 0.0, origin, path) * kMHz;
  if (const json* v = find(obj, "c13")) {
    if (!v->is_object()) fail(origin, path + ".c13", "expected an object");
    check_keys(*v, {"a_mhz", "nuclear_g"}, origin, path + ".c13");
    CarbonCoupling carbon;
    if (const json* a = find(*v, "a_mhz")) {
      carbon.hyperfine = get_mat3(*a, origin, path + ".c13.a_mhz") * kMHz;
    }
    carbon.nuclear_g =
        get_number(*v, "nuclear_g", 0.0, origin, path + ".c13");
    system.carbon = carbon;
  }
  try {
    system.validate();
  } catch (const std::invalid_argument& e) {
    fail(origin, path, e.what());
  }
}

void parse_grid(const json& obj, EseemGrid& grid, const std::string& origin) {
  const std::string path = "grid";
  check_keys(obj, {"n1", "n2", "dt1_s", "dt2_s", "t1_start_s", "t2_start_s"},
             origin, path);
  grid.n1 = get_int(obj, "n1", grid.n1, origin, path);
  grid.n2 = get_int(obj, "n2", grid.n2, origin, path);
  grid.dt1 = get_number(obj, "dt1_s", grid.dt1, origin, path);
  grid.dt2 = get_number(obj, "dt2_s", grid.dt2, origin, path);
  grid.t1_start = get_number(obj, "t1_start_s", grid.t1_start, origin, path);
  grid.t2_start = get_number(obj, "t2_start_s", grid.t2_start, origin, path);
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    fail(origin, path, e.what());
  }
}

void parse_svt(const json& obj, SvtParams& svt, const std::string& origin) {
  const std::string path = "svt";
  check_keys(obj,
             {"tau", "delta", "epsilon", "max_iterations", "kickstart",
              "allow_nonconvergent_delta"},
             origin, path);
  svt.tau = get_number(obj, "tau", svt.tau, origin, path);
  svt.delta = get_number(obj, "delta", svt.delta, origin, path);
  svt.epsilon = get_number(obj, "epsilon", svt.epsilon, origin, path);
  svt.max_iterations =
      get_int(obj, "max_iterations", svt.max_iterations, origin, path);
  svt.kickstart = get_bool(obj, "kickstart", svt.kickstart, origin, path);
  svt.allow_nonconvergent_delta = get_bool(
      obj, "allow_nonconvergent_delta", svt.allow_nonconvergent_delta, origin,
      path);
  if (svt.tau != 0.0) {
    try {
      svt.validate();
    } catch (const std::invalid_argument& e) {
      fail(origin, path, e.what());
    }
  }
}

void parse_sweep(const json& obj, SweepConfig& sweep,
                 const std::string& origin) {
  const std::string path = "sweep";
  check_keys(obj,
             {"fractions", "taus", "repeats", "base_seed", "noise_sigma",
              "domain"},
             origin, path);
  if (const json* v = find(obj, "fractions")) {
    if (!v->is_array() || v->empty()) {
      fail(origin, path + ".fractions", "expected a non-empty array");
    }
    sweep.fractions.clear();
    for (const json& x : *v) {
      if (!x.is_number()) fail(origin, path + ".fractions", "expected numbers");
      sweep.fractions.push_back(x.get<double>());
    }
  }
  if (const json* v = find(obj, "taus")) {
    if (!v->is_array() || v->empty()) {
      fail(origin, path + ".taus", "expected a non-empty array");
    }
    sweep.taus.clear();
    for (const json& x : *v) {
      if (!x.is_number()) fail(origin, path + ".taus", "expected numbers");
      sweep.taus.push_back(x.get<double>());
    }
  }
  sweep.repeats = get_int(obj, "repeats", sweep.repeats, origin, path);
  if (const json* v = find(obj, "base_seed")) {
    if (!v->is_number_unsigned() && !v->is_number_integer()) {
      fail(origin, path + ".base_seed", "expected an integer");
    }
    sweep.base_seed = v->get<std::uint64_t>();
  }
  sweep.noise_sigma =
      get_number(obj, "noise_sigma", sweep.noise_sigma, origin, path);
  if (const json* v = find(obj, "domain")) {
    if (!v->is_string()) fail(origin, path + ".domain", "expected a string");
    const std::string d = v->get<std::string>();
    if (d == "time") {
      sweep.domain = FidelityDomain::kTime;
    } else if (d == "frequency") {
      sweep.domain = FidelityDomain::kFrequency;
    } else {
      fail(origin, path + ".domain", "expected 'time' or 'frequency'");
    }
  }
}

void parse_synthetic(const json& arr, std::vector<CosinePeak>& peaks,
                     const std::string& origin) {
  const std::string path = "synthetic";
  if (!arr.is_array() || arr.empty()) {
    fail(origin, path, "expected a non-empty array of peaks");
  }
  peaks.clear();
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const json& p = arr[k];
    const std::string ppath = path + "[" + std::to_string(k) + "]";
    if (!p.is_object()) fail(origin, ppath, "expected an object");
    check_keys(p, {"nu1_mhz", "nu2_mhz", "amplitude", "phase"}, origin, ppath);
    CosinePeak peak;
    peak.nu1 = get_number(p, "nu1_mhz", 0.0, origin, ppath) * 1e6;
    peak.nu2 = get_number(p, "nu2_mhz", 0.0, origin, ppath) * 1e6;
    peak.amplitude = get_number(p, "amplitude", 1.0, origin, ppath);
    peak.phase = get_number(p, "phase", 0.0, origin, ppath);
    peaks.push_back(peak);
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line:column anchor.
    std::size_t line = 1, col = 1;
    const std::size_t stop =
        e.byte < text.size() ? e.byte : text.size();
    for (std::size_t k = 0; k + 1 < stop + 1 && k < text.size() && k < stop;
         ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) {
    fail(origin, "", "top level must be an object");
  }
  check_keys(doc, {"system", "grid", "svt", "sweep", "synthetic"}, origin, "");

  RunConfig config;
  if (const json* v = find(doc, "grid")) {
    if (!v->is_object()) fail(origin, "grid", "expected an object");
    parse_grid(*v, config.grid, origin);
  }
  if (const json* v = find(doc, "system")) {
    if (!v->is_object()) fail(origin, "system", "expected an object");
    parse_system(*v, config.system, origin);
    config.has_system = true;
  }
  if (const json* v = find(doc, "svt")) {
    if (!v->is_object()) fail(origin, "svt", "expected an object");
    parse_svt(*v, config.svt, origin);
  }
  if (const json* v = find(doc, "sweep")) {
    if (!v->is_object()) fail(origin, "sweep", "expected an object");
    parse_sweep(*v, config.sweep, origin);
  }
  if (const json* v = find(doc, "synthetic")) {
    parse_synthetic(*v, config.synthetic, origin);
  }
  config.sweep.grid = config.grid;
  try {
    config.sweep.validate();
  } catch (const std::invalid_argument& e) {
    fail(origin, "sweep", e.what());
  }
  return config;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path.string());
}

Matrix ground_truth(const RunConfig& config, int jobs) {
  if (!config.synthetic.empty()) {
    return synthetic_low_rank_signal(config.synthetic, config.grid);
  }
  if (!config.has_system) {
    throw ConfigError(
        "config provides neither a spin system nor synthetic peaks");
  }
  return eseem_signal(config.system, config.grid, jobs).data;
}

}  // namespace svt2d
