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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "it2sail/metrics.hpp"
#include "it2sail/sim.hpp"

namespace it2sail {

/// Dimensions of the FOU-size study. Defaults give the 324-cell matrix.
struct ExperimentMatrix {
  std::vector<char> wind_configs{'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I'};
  std::vector<double> fou_sizes{0, 5, 10, 15, 20, 25};
  std::vector<double> vertical_movements{25, 50, 100};
  std::vector<int> turn_counts{1, 2};
  std::size_t runs_per_batch = kCanonicalRunsPerBatch;
  std::uint64_t base_seed = 1;
  bool benchmark = false;  // add Single-0 cells for every wind config and FOU size
};

inline constexpr std::size_t kSmokeRunsPerBatch = 3;
inline constexpr const char* kWorkersEnvVar = "IT2SAIL_WORKERS";

struct HarnessConfig {
  ExperimentMatrix matrix;
  PhysicsParams physics;
  double rudder_limit = 30.0;
  std::size_t grid_points = kDefaultGridPoints;
  std::filesystem::path output_dir = "results";
  unsigned workers = 0;  // 0: hardware concurrency
  bool write_run_logs = true;
  bool include_incomplete = true;
  double significance = kSignificanceThreshold;

  /// Throws std::invalid_argument on out-of-range settings.
  void validate() const;
  /// Controller settings with this config's rudder limit and grid.
  ControllerConfig controller(const ControllerConfig& base) const;
};

/// Parses the YAML config format (see README). Unknown keys are rejected so a
/// typo cannot silently fall back to a default.
HarnessConfig parse_config(const std::string& yaml_text);
HarnessConfig load_config(const std::filesystem::path& path);

/// `requested` unless the environment variable overrides it; 0 resolves to
/// the hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested);

}  // namespace it2sail
