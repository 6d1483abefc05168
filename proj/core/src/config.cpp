/*   Copyright 2026 The it2sail Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include "it2sail/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace it2sail {

namespace {

void reject_unknown(const YAML::Node& node, const std::string& section, const std::set<std::string>& known) {
  if (!node) return;
  if (!node.IsMap()) throw std::invalid_argument("config section '" + section + "' must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!known.count(key)) throw std::invalid_argument("unknown config key '" + section + "." + key + "'");
  }
}

template <typename T>
void read(const YAML::Node& node, const char* key, T& out) {
  if (node && node[key]) out = node[key].as<T>();
}

}  // namespace

void HarnessConfig::validate() const {
  physics.validate();
  if (matrix.runs_per_batch == 0) throw std::invalid_argument("runs_per_batch must be positive");
  if (matrix.wind_configs.empty() || matrix.fou_sizes.empty()) {
    throw std::invalid_argument("matrix needs at least one wind config and FOU size");
  }
  for (char w : matrix.wind_configs) wind_config(w);
  for (double m : matrix.fou_sizes) {
    if (!(m >= 0.0)) throw std::invalid_argument("FOU sizes must be >= 0");
  }
  for (int t : matrix.turn_counts) {
    for (double v : matrix.vertical_movements) build_course(t, v, physics.leg_length);
  }
  controller(ControllerConfig::type1()).validate();
  if (!(significance > 0.0 && significance < 1.0)) throw std::invalid_argument("significance must be in (0, 1)");
}

ControllerConfig HarnessConfig::controller(const ControllerConfig& base) const {
  ControllerConfig c = base;
  c.rudder_limit = rudder_limit;
  c.grid_points = grid_points;
  return c;
}

HarnessConfig parse_config(const std::string& yaml_text) {
  HarnessConfig cfg;
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("config is not valid YAML: ") + e.what());
  }
  if (!root || root.IsNull()) return cfg;
  reject_unknown(root, "<root>", {"matrix", "physics", "controller", "output", "analysis"});

  try {
    const auto m = root["matrix"];
    reject_unknown(m, "matrix",
                   {"wind_configs", "fou_sizes", "vertical_movements", "turn_counts", "runs_per_batch", "base_seed",
                    "benchmark"});
    if (m && m["wind_configs"]) {
      cfg.matrix.wind_configs.clear();
      for (const auto& w : m["wind_configs"]) {
        const auto s = w.as<std::string>();
        if (s.size() != 1) throw std::invalid_argument("wind config labels are single letters, got '" + s + "'");
        cfg.matrix.wind_configs.push_back(s[0]);
      }
    }
    read(m, "fou_sizes", cfg.matrix.fou_sizes);
    read(m, "vertical_movements", cfg.matrix.vertical_movements);
    read(m, "turn_counts", cfg.matrix.turn_counts);
    read(m, "runs_per_batch", cfg.matrix.runs_per_batch);
    read(m, "base_seed", cfg.matrix.base_seed);
    read(m, "benchmark", cfg.matrix.benchmark);

    const auto p = root["physics"];
    reject_unknown(p, "physics",
                   {"dt", "control_period", "wind_period", "speed_time_constant", "rudder_gain", "full_rudder_speed",
                    "capture_radius", "timeout", "leg_length"});
    read(p, "dt", cfg.physics.dt);
    read(p, "control_period", cfg.physics.control_period);
    read(p, "wind_period", cfg.physics.wind_period);
    read(p, "speed_time_constant", cfg.physics.speed_time_constant);
    read(p, "rudder_gain", cfg.physics.rudder_gain);
    read(p, "full_rudder_speed", cfg.physics.full_rudder_speed);
    read(p, "capture_radius", cfg.physics.capture_radius);
    read(p, "timeout", cfg.physics.timeout);
    read(p, "leg_length", cfg.physics.leg_length);

    const auto c = root["controller"];
    reject_unknown(c, "controller", {"rudder_limit", "grid_points"});
    read(c, "rudder_limit", cfg.rudder_limit);
    read(c, "grid_points", cfg.grid_points);

    const auto o = root["output"];
    reject_unknown(o, "output", {"directory", "workers", "write_run_logs"});
    if (o && o["directory"]) cfg.output_dir = o["directory"].as<std::string>();
    read(o, "workers", cfg.workers);
    read(o, "write_run_logs", cfg.write_run_logs);

    const auto a = root["analysis"];
    reject_unknown(a, "analysis", {"include_incomplete", "significance"});
    read(a, "include_incomplete", cfg.include_incomplete);
    read(a, "significance", cfg.significance);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

unsigned resolve_workers(unsigned requested) {
  if (const char* env = std::getenv(kWorkersEnvVar); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) requested = static_cast<unsigned>(v);
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

}  // namespace it2sail
