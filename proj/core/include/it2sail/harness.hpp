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

// Experiment matrix expansion, seeded batch execution and report emission.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "it2sail/config.hpp"
#include "it2sail/metrics.hpp"
#include "it2sail/store.hpp"

namespace it2sail {

/// Type-2 cells ordered by wind config, then course, then FOU size. With the
/// default matrix this is 9 x 3 x 2 x 6 = 324 cells; `benchmark` prepends a
/// Single-0 block to every wind config.
std::vector<Cell> expand_matrix(const ExperimentMatrix& matrix, double leg_length = kDefaultLegLength);

/// One type-1 cell per distinct environment in `cells`, in first-seen order.
std::vector<Cell> baseline_cells(const std::vector<Cell>& cells);

/// Episode seed for run `run_index` of a cell. Depends only on the cell's
/// environment (course and wind), so every controller sees the same wind
/// sequence for a given run index. Injective over (environment, run index)
/// for a fixed base seed: the key packs wind, turns, vertical and run index
/// into disjoint bit fields and is passed through a 64-bit bijection.
std::uint64_t derive_seed(std::uint64_t base_seed, const Cell& cell, std::size_t run_index);

struct BatchOptions {
  std::size_t runs = kCanonicalRunsPerBatch;
  std::uint64_t base_seed = 1;
  PhysicsParams physics;
  const ResultStore* store = nullptr;  // persist run logs and the batch file when set
  bool write_run_logs = true;
};

BatchResult run_batch(const Cell& cell, const BatchOptions& options);

struct MatrixOptions {
  BatchOptions batch;
  unsigned workers = 1;
  std::function<void(const std::string&)> warn;  // defaults to std::clog
};

struct CellFailure {
  std::string cell;
  std::string message;
};

struct MatrixOutcome {
  std::vector<BatchResult> batches;  // successful cells, canonical order
  std::vector<CellFailure> failures;
};

/// Runs every (cell, run) job across `workers` threads, then writes batch
/// files and the batch summary when a store is configured.
MatrixOutcome run_matrix(const std::vector<Cell>& cells, const MatrixOptions& options);

/// Cells for a matrix run: the type-2 matrix plus the type-1 baselines.
std::vector<Cell> matrix_with_baselines(const HarnessConfig& config);

struct ReportOptions {
  bool include_incomplete = true;
  double significance = kSignificanceThreshold;
  double leg_length = kDefaultLegLength;
};

struct PlotPoint {
  std::string course;
  char wind_config = 'A';
  std::string fou_size;  // "t1" for the type-1 reference, else the FOU size
  double mean_rmse = 0.0;
};

struct Reports {
  std::vector<ComparisonRow> comparison;
  std::vector<ComparisonRow> best_fou;
  std::vector<PlotPoint> plot;
  std::vector<std::string> warnings;
};

/// Pure function of the batches: every type-2 batch compared against the
/// type-1 batch of the same environment; best improving FOU per environment;
/// plot points for every batch.
Reports build_reports(const std::vector<BatchResult>& batches, const ReportOptions& options = {});

inline constexpr const char* kComparisonHeader =
    "course,wind_config,fou_size,t1_mean_rmse,t2_mean_rmse,rmse_difference,p_value,significant,degenerate";
inline constexpr const char* kBestFouHeader =
    "wind_config,t1_rmse,t2_rmse,vertical_movement,fou_size,p_value,turns,significant";
inline constexpr const char* kPlotHeader = "course,wind_config,fou_size,mean_rmse";

/// Writes comparison.csv, best_fou.csv and plot_data.csv under the store root.
Reports emit_reports(const ResultStore& store, const ReportOptions& options = {});
/// Writes plot_data.csv only.
Reports emit_plot_data(const ResultStore& store, const ReportOptions& options = {});

}  // namespace it2sail
