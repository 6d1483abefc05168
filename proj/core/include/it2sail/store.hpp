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

// On-disk layout of a matrix run:
//
//   <root>/runs/<cell-id>/run_<NNN>.csv   per-run control-cycle logs
//   <root>/batches/<cell-id>.csv          one row per run: seed, completion, RMSE
//   <root>/batch_summary.csv              one row per batch
//   <root>/comparison.csv                 type-2 vs type-1 rows
//   <root>/best_fou.csv                   best improving FOU per course/wind
//   <root>/plot_data.csv                  mean RMSE per course/wind/FOU
//
// Per-run and per-batch files are written by exactly one worker each.

#include <filesystem>
#include <vector>

#include "it2sail/metrics.hpp"

namespace it2sail {

inline constexpr const char* kBatchHeader = "cell,course,wind_config,controller,fou_size,run,seed,completed,rmse,elapsed";
inline constexpr const char* kSummaryHeader =
    "cell,course,wind_config,controller,fou_size,runs,completed,mean_rmse,mean_rmse_completed,canonical";

class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path run_log_path(const Cell& cell, std::size_t run_index) const;
  std::filesystem::path batch_path(const Cell& cell) const;
  std::filesystem::path summary_path() const { return root_ / "batch_summary.csv"; }
  std::filesystem::path comparison_path() const { return root_ / "comparison.csv"; }
  std::filesystem::path best_fou_path() const { return root_ / "best_fou.csv"; }
  std::filesystem::path plot_data_path() const { return root_ / "plot_data.csv"; }

  /// I/O failures throw std::runtime_error naming the cell.
  void write_run_log(const Cell& cell, std::size_t run_index, const RunRecord& record) const;
  void write_batch(const BatchResult& batch) const;
  void write_summary(const std::vector<BatchResult>& batches) const;

  /// Every batch file under batches/, in canonical cell order.
  std::vector<BatchResult> load_batches(double leg_length = kDefaultLegLength) const;

 private:
  std::filesystem::path root_;
};

/// Canonical ordering: wind config, course (turns then vertical), type-1
/// before type-2, then FOU size.
bool cell_less(const Cell& a, const Cell& b);

}  // namespace it2sail
