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

// it2sail: run single episodes, experiment matrices and their reports.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "it2sail/config.hpp"
#include "it2sail/harness.hpp"
#include "it2sail/sim.hpp"

namespace {

using namespace it2sail;

void print_warnings(const Reports& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_run(const std::string& cell_spec, std::uint64_t seed, const std::string& config_path,
            const std::string& out_path) {
  HarnessConfig cfg = config_path.empty() ? HarnessConfig{} : load_config(config_path);
  Cell cell = Cell::parse(cell_spec, cfg.physics.leg_length);
  cell.controller = cfg.controller(cell.controller);
  const RunRecord rec = run_episode(cell.course, wind_config(cell.wind), cell.controller, seed, cfg.physics);
  if (out_path.empty() || out_path == "-") {
    write_run_csv(std::cout, rec);
  } else {
    const std::filesystem::path path(out_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_run_csv(out, rec);
  }
  std::fprintf(stderr, "%s seed=%llu completed=%d rmse=%.6f elapsed=%.2f waypoints=%zu\n", cell.id().c_str(),
               static_cast<unsigned long long>(seed), rec.completed ? 1 : 0, rec.rmse, rec.elapsed,
               rec.waypoints_reached);
  if (rec.vacuous_cycles > 0) std::fprintf(stderr, "warning: %zu vacuous controller outputs\n", rec.vacuous_cycles);
  return 0;
}

int cmd_matrix(const std::string& config_path, bool smoke, const std::string& out_dir) {
  HarnessConfig cfg = config_path.empty() ? HarnessConfig{} : load_config(config_path);
  if (smoke) cfg.matrix.runs_per_batch = kSmokeRunsPerBatch;
  if (!out_dir.empty()) cfg.output_dir = out_dir;

  const ResultStore store(cfg.output_dir);
  const std::vector<Cell> cells = matrix_with_baselines(cfg);
  MatrixOptions opts;
  opts.batch.runs = cfg.matrix.runs_per_batch;
  opts.batch.base_seed = cfg.matrix.base_seed;
  opts.batch.physics = cfg.physics;
  opts.batch.store = &store;
  opts.batch.write_run_logs = cfg.write_run_logs;
  opts.workers = resolve_workers(cfg.workers);

  std::cerr << "running " << cells.size() << " batches x " << opts.batch.runs << " runs on " << opts.workers
            << " worker(s) into " << store.root().string() << '\n';
  const MatrixOutcome outcome = run_matrix(cells, opts);
  for (const auto& f : outcome.failures) std::cerr << "error: cell " << f.cell << ": " << f.message << '\n';

  const Reports r = emit_reports(store, {cfg.include_incomplete, cfg.significance, cfg.physics.leg_length});
  print_warnings(r);
  std::cerr << outcome.batches.size() << " batches ok, " << outcome.failures.size() << " failed; "
            << r.comparison.size() << " comparison rows, " << r.best_fou.size() << " best-FOU rows\n";
  return outcome.failures.empty() ? 0 : 1;
}

int cmd_analyze(const std::string& store_dir, bool exclude_incomplete, double significance, bool plot_only) {
  const ResultStore store(store_dir);
  const ReportOptions opts{!exclude_incomplete, significance, kDefaultLegLength};
  const Reports r = plot_only ? emit_plot_data(store, opts) : emit_reports(store, opts);
  print_warnings(r);
  if (plot_only) {
    std::cerr << r.plot.size() << " plot rows -> " << store.plot_data_path().string() << '\n';
  } else {
    std::cerr << r.comparison.size() << " comparison rows, " << r.best_fou.size() << " best-FOU rows, "
              << r.plot.size() << " plot rows\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type-1 / interval type-2 fuzzy sailing controller experiments"};
  app.require_subcommand(1);

  std::string cell_spec, config_path, out_path, store_dir, out_dir;
  std::uint64_t seed = 0;
  bool smoke = false;
  bool exclude_incomplete = false;
  double significance = 0.0005;

  auto* run = app.add_subcommand("run", "Simulate one episode and print its per-cycle CSV log");
  run->add_option("--cell", cell_spec, "Cell as <course>:<wind>:<controller>, e.g. Single-50:A:t2-20")->required();
  run->add_option("--seed", seed, "Episode seed")->required();
  run->add_option("--config", config_path, "YAML config for physics/controller overrides")->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Write the log here instead of stdout");

  auto* matrix = app.add_subcommand("matrix", "Run the experiment matrix and emit reports");
  matrix->add_option("--config", config_path, "YAML config file")->check(CLI::ExistingFile);
  matrix->add_flag("--smoke", smoke, "Reduce batches to 3 runs");
  matrix->add_option("--out", out_dir, "Override output.directory");

  auto* analyze = app.add_subcommand("analyze", "Emit comparison, best-FOU and plot-data CSVs from a store");
  auto* plot = app.add_subcommand("plot-data", "Emit only the RMSE-vs-FOU plot-data CSV from a store");
  for (auto* sub : {analyze, plot}) {
    sub->add_option("--store", store_dir, "Result store directory")->required()->check(CLI::ExistingDirectory);
    sub->add_flag("--exclude-incomplete", exclude_incomplete, "Drop timed-out runs from RMSE averages");
    sub->add_option("--significance", significance, "Significance threshold (strict p <)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(cell_spec, seed, config_path, out_path);
    if (*matrix) return cmd_matrix(config_path, smoke, out_dir);
    if (*analyze) return cmd_analyze(store_dir, exclude_incomplete, significance, false);
    if (*plot) return cmd_analyze(store_dir, exclude_incomplete, significance, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
