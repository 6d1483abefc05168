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

#include "it2sail/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace it2sail {

namespace fs = std::filesystem;

std::vector<Cell> expand_matrix(const ExperimentMatrix& matrix, double leg_length) {
  std::vector<CourseSpec> courses;
  for (int turns : matrix.turn_counts) {
    for (double v : matrix.vertical_movements) courses.push_back(build_course(turns, v, leg_length));
  }
  std::vector<Cell> cells;
  for (char w : matrix.wind_configs) {
    const char label = wind_config(w).label;
    if (matrix.benchmark) {
      for (double m : matrix.fou_sizes) {
        cells.push_back({build_course(0, 0.0, leg_length), label, ControllerConfig::interval(m)});
      }
    }
    for (const auto& course : courses) {
      for (double m : matrix.fou_sizes) cells.push_back({course, label, ControllerConfig::interval(m)});
    }
  }
  return cells;
}

std::vector<Cell> baseline_cells(const std::vector<Cell>& cells) {
  std::vector<Cell> out;
  for (const auto& c : cells) {
    const bool seen =
        std::any_of(out.begin(), out.end(), [&](const Cell& b) { return b.same_environment(c); });
    if (!seen) out.push_back({c.course, c.wind, ControllerConfig::type1()});
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t base_seed, const Cell& cell, std::size_t run_index) {
  const auto wind = static_cast<std::uint64_t>(wind_config(cell.wind).label - 'A');
  const auto turns = static_cast<std::uint64_t>(cell.course.turns);
  const double v = cell.course.vertical;
  if (v < 0.0 || v >= 65536.0 || v != std::floor(v)) {
    throw std::invalid_argument("vertical movement must be a whole number of metres below 65536");
  }
  if (run_index >= (1ULL << 32)) throw std::invalid_argument("run index too large");
  // [wind:4][turns:4][vertical:16][run:32] -> 56 bits, no overlap.
  const std::uint64_t key = (wind << 52) | (turns << 48) | (static_cast<std::uint64_t>(v) << 32) |
                            static_cast<std::uint64_t>(run_index);
  return mix64(key ^ mix64(base_seed));
}

namespace {

RunSummary run_one(const Cell& cell, const HelmController& controller, std::size_t i, const BatchOptions& options,
                   std::size_t* vacuous) {
  const std::uint64_t seed = derive_seed(options.base_seed, cell, i);
  const RunRecord rec = run_episode(cell.course, wind_config(cell.wind), controller, seed, options.physics);
  if (options.store && options.write_run_logs) options.store->write_run_log(cell, i, rec);
  if (vacuous) *vacuous += rec.vacuous_cycles;
  return {i, seed, rec.completed, rec.rmse, rec.elapsed};
}

void default_warn(const std::string& msg) { std::clog << "warning: " << msg << '\n'; }

}  // namespace

BatchResult run_batch(const Cell& cell, const BatchOptions& options) {
  if (options.runs == 0) throw std::invalid_argument("a batch needs at least one run");
  const HelmController controller(cell.controller);
  BatchResult batch{cell, {}};
  std::size_t vacuous = 0;
  for (std::size_t i = 0; i < options.runs; ++i) batch.runs.push_back(run_one(cell, controller, i, options, &vacuous));
  if (vacuous > 0) default_warn(cell.id() + ": " + std::to_string(vacuous) + " vacuous controller outputs");
  if (options.store) options.store->write_batch(batch);
  return batch;
}

MatrixOutcome run_matrix(const std::vector<Cell>& cells, const MatrixOptions& options) {
  const auto warn = options.warn ? options.warn : default_warn;
  const std::size_t runs = options.batch.runs;
  if (runs == 0) throw std::invalid_argument("a batch needs at least one run");

  std::vector<std::optional<HelmController>> controllers(cells.size());
  std::vector<std::string> errors(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    try {
      controllers[c].emplace(cells[c].controller);
    } catch (const std::exception& e) {
      errors[c] = e.what();
    }
  }

  std::vector<std::vector<RunSummary>> results(cells.size(), std::vector<RunSummary>(runs));
  std::vector<std::size_t> vacuous(cells.size() * runs, 0);
  std::mutex error_mutex;
  std::atomic<std::size_t> next{0};
  const std::size_t total = cells.size() * runs;

  auto worker = [&] {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= total) return;
      const std::size_t c = job / runs;
      const std::size_t i = job % runs;
      if (!controllers[c]) continue;
      try {
        results[c][i] = run_one(cells[c], *controllers[c], i, options.batch, &vacuous[job]);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (errors[c].empty()) errors[c] = e.what();
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(total)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  MatrixOutcome out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (errors[c].empty()) {
      BatchResult batch{cells[c], std::move(results[c])};
      std::size_t v = 0;
      for (std::size_t i = 0; i < runs; ++i) v += vacuous[c * runs + i];
      if (v > 0) warn(cells[c].id() + ": " + std::to_string(v) + " vacuous controller outputs");
      try {
        if (options.batch.store) options.batch.store->write_batch(batch);
        out.batches.push_back(std::move(batch));
      } catch (const std::exception& e) {
        errors[c] = e.what();
      }
    }
    if (!errors[c].empty()) out.failures.push_back({cells[c].id(), errors[c]});
  }
  std::stable_sort(out.batches.begin(), out.batches.end(),
                   [](const BatchResult& a, const BatchResult& b) { return cell_less(a.cell, b.cell); });
  if (options.batch.store) options.batch.store->write_summary(out.batches);
  return out;
}

std::vector<Cell> matrix_with_baselines(const HarnessConfig& config) {
  std::vector<Cell> cells = expand_matrix(config.matrix, config.physics.leg_length);
  std::vector<Cell> all = baseline_cells(cells);
  all.insert(all.end(), cells.begin(), cells.end());
  for (auto& c : all) c.controller = config.controller(c.controller);
  std::stable_sort(all.begin(), all.end(), cell_less);
  return all;
}

Reports build_reports(const std::vector<BatchResult>& batches, const ReportOptions& options) {
  Reports out;
  std::vector<const BatchResult*> sorted;
  for (const auto& b : batches) sorted.push_back(&b);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BatchResult* a, const BatchResult* b) { return cell_less(a->cell, b->cell); });

  std::map<std::string, const BatchResult*> baseline;
  for (const BatchResult* b : sorted) {
    if (b->cell.controller.kind == ControllerKind::Type1) baseline.emplace(b->cell.environment_id(), b);
  }

  const ComparisonOptions cmp{options.include_incomplete, options.significance};
  for (const BatchResult* b : sorted) {
    const double mean = b->mean_rmse(options.include_incomplete);
    if (std::isnan(mean)) {
      out.warnings.push_back(b->cell.id() + ": no qualifying runs; omitted from plot data");
    } else {
      char fou[32];
      std::snprintf(fou, sizeof fou, "%g", b->cell.controller.fou_size);
      out.plot.push_back({b->cell.course.label(), b->cell.wind,
                          b->cell.controller.kind == ControllerKind::Type1 ? std::string("t1") : std::string(fou),
                          mean});
    }
    if (b->cell.controller.kind != ControllerKind::IntervalType2) continue;
    const auto it = baseline.find(b->cell.environment_id());
    if (it == baseline.end()) {
      out.warnings.push_back(b->cell.id() + ": no type-1 baseline batch; comparison skipped");
      continue;
    }
    try {
      out.comparison.push_back(compare_batches(*it->second, *b, cmp));
    } catch (const std::invalid_argument& e) {
      out.warnings.push_back(b->cell.id() + ": " + e.what());
    }
  }

  // Best improving FOU per environment, keyed and ordered by
  // turns, then vertical movement, then wind config.
  std::map<std::tuple<int, double, char>, ComparisonRow> best;
  for (const auto& row : out.comparison) {
    if (!(row.rmse_difference < 0.0)) continue;
    const auto key = std::make_tuple(row.turns, row.vertical, row.wind_config);
    auto [it, inserted] = best.emplace(key, row);
    if (!inserted && row.t2_mean_rmse < it->second.t2_mean_rmse) it->second = row;
  }
  for (auto& [key, row] : best) out.best_fou.push_back(row);
  return out;
}

namespace {

std::string f6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string e6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& body) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  body(out);
  out.close();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_plot(const fs::path& path, const Reports& r) {
  write_file(path, [&](std::ostream& out) {
    out << kPlotHeader << '\n';
    for (const auto& p : r.plot) out << p.course << ',' << p.wind_config << ',' << p.fou_size << ',' << f6(p.mean_rmse) << '\n';
  });
}

}  // namespace

Reports emit_reports(const ResultStore& store, const ReportOptions& options) {
  Reports r = build_reports(store.load_batches(options.leg_length), options);
  write_file(store.comparison_path(), [&](std::ostream& out) {
    out << kComparisonHeader << '\n';
    for (const auto& c : r.comparison) {
      out << c.course << ',' << c.wind_config << ',' << g(c.fou_size) << ',' << f6(c.t1_mean_rmse) << ','
          << f6(c.t2_mean_rmse) << ',' << f6(c.rmse_difference) << ',' << e6(c.p_value) << ','
          << (c.significant ? 1 : 0) << ',' << (c.degenerate ? 1 : 0) << '\n';
    }
  });
  write_file(store.best_fou_path(), [&](std::ostream& out) {
    out << kBestFouHeader << '\n';
    for (const auto& c : r.best_fou) {
      out << c.wind_config << ',' << f6(c.t1_mean_rmse) << ',' << f6(c.t2_mean_rmse) << ',' << g(c.vertical) << ','
          << g(c.fou_size) << ',' << e6(c.p_value) << ',' << c.turns << ',' << (c.significant ? 1 : 0) << '\n';
    }
  });
  write_plot(store.plot_data_path(), r);
  return r;
}

Reports emit_plot_data(const ResultStore& store, const ReportOptions& options) {
  Reports r = build_reports(store.load_batches(options.leg_length), options);
  write_plot(store.plot_data_path(), r);
  return r;
}

}  // namespace it2sail
