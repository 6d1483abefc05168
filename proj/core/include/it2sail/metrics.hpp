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

// Batch-level scoring: one experiment cell, the runs executed for it, and the
// type-1 versus type-2 comparison row built from two batches.

#include <cstdint>
#include <string>
#include <vector>

#include "it2sail/helm.hpp"
#include "it2sail/sim.hpp"
#include "it2sail/stats.hpp"

namespace it2sail {

inline constexpr std::size_t kCanonicalRunsPerBatch = 30;
inline constexpr double kSignificanceThreshold = 0.0005;

/// Course x wind configuration x controller.
struct Cell {
  CourseSpec course;
  char wind = 'A';
  ControllerConfig controller;

  /// File-system safe identifier, e.g. "Single-50_A_t2-20".
  std::string id() const;
  /// The same without the controller part; cells sharing it share seeds.
  std::string environment_id() const;
  bool same_environment(const Cell& other) const;

  /// Parses "<course>:<wind>:<controller>", e.g. "Single-50:A:t2-20".
  static Cell parse(const std::string& spec, double leg_length = kDefaultLegLength);
};

struct RunSummary {
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  bool completed = false;
  double rmse = 0.0;
  double elapsed = 0.0;
};

struct BatchResult {
  Cell cell;
  std::vector<RunSummary> runs;

  std::size_t completion_count() const;
  /// True when the batch has the full 30 runs; smoke batches are not.
  bool canonical() const { return runs.size() == kCanonicalRunsPerBatch; }
  std::vector<double> rmse_values(bool include_incomplete = true) const;
  /// NaN when no run qualifies.
  double mean_rmse(bool include_incomplete = true) const;
};

struct ComparisonOptions {
  bool include_incomplete = true;
  double threshold = kSignificanceThreshold;
};

struct ComparisonRow {
  char wind_config = 'A';
  std::string course;
  int turns = 0;
  double vertical = 0.0;
  double t1_mean_rmse = 0.0;
  double t2_mean_rmse = 0.0;
  double rmse_difference = 0.0;  // t2 - t1
  double fou_size = 0.0;
  double p_value = 0.5;          // one-sided: t2 RMSEs stochastically smaller
  bool significant = false;      // p < threshold, strictly
  bool degenerate = false;
};

/// Throws std::invalid_argument when the batches belong to different
/// environments or either has no qualifying runs.
ComparisonRow compare_batches(const BatchResult& t1, const BatchResult& t2, const ComparisonOptions& options = {});

}  // namespace it2sail
