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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "it2sail/config.hpp"
#include "it2sail/harness.hpp"
#include "it2sail/helm.hpp"
#include "it2sail/interval.hpp"
#include "it2sail/sim.hpp"
#include "it2sail/stats.hpp"
#include "it2sail/store.hpp"
#include "oracles.hpp"

using namespace it2sail;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

unsigned workers() { return resolve_workers(0); }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("it2sail_accept_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome fou_zero_surface() {
  const HelmController t1(ControllerConfig::type1());
  const HelmController t2(ControllerConfig::interval(0));
  double worst = 0;
  for (int i = 0; i < 37; ++i) {
    for (int j = 0; j < 13; ++j) {
      const double e = -90.0 + 5.0 * i;
      const double d = -30.0 + 5.0 * j;
      worst = std::max(worst, std::abs(t1.rudder_change(e, d).value - t2.rudder_change(e, d).value));
    }
  }
  return {worst < 1e-9, "max |diff| " + fmt("%.3e", worst)};
}

Outcome km_oracle() {
  std::mt19937_64 gen(1000);
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(gen);
    std::vector<double> z(n), lo(n), up(n);
    const double step = 30.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
      z[i] = -15.0 + step * i;
      up[i] = unit(gen);
      lo[i] = up[i] * unit(gen);
    }
    const int k = static_cast<int>(gen() % n);
    up[k] = std::max(up[k], 0.01);
    const auto [l, r] = oracle::switch_point_centroid(z, lo, up);
    const CentroidInterval c = km_type_reduce(z, lo, up);
    const double err = std::max(std::abs(c.left - l), std::abs(c.right - r));
    worst = std::max(worst, err);
    if (!(err <= 1e-9)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches, max |diff| " + fmt("%.3e", worst)};
}

Outcome wilcoxon_exactness() {
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  const double p = wilcoxon_rank_sum_one_sided(a, b, RankSumMethod::Exact).p_value;
  bool ok = std::abs(p - 0.05) <= 1e-9;

  // 30-run batches with t2 = t1 - 1 elementwise; compare the approximation
  // with exact enumeration on 6 + 6 truncations and on the full samples.
  double worst = 0;
  std::mt19937_64 gen(30);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int set = 0; set < 20; ++set) {
    std::vector<double> t1(30), t2(30);
    for (auto& x : t1) x = 3.0 + (0.5 + 0.25 * set) * noise(gen);
    for (std::size_t i = 0; i < 30; ++i) t2[i] = t1[i] - 1.0;
    for (std::size_t n : {std::size_t{6}, std::size_t{30}}) {
      const std::span<const double> sa(t2.data(), n), sb(t1.data(), n);
      const double exact = wilcoxon_rank_sum_one_sided(sa, sb, RankSumMethod::Exact).p_value;
      const double normal = wilcoxon_rank_sum_one_sided(sa, sb, RankSumMethod::Normal).p_value;
      worst = std::max(worst, std::abs(exact - normal));
    }
  }
  ok = ok && worst <= 0.02;
  return {ok, "p " + fmt("%.12f", p) + ", max |normal - exact| " + fmt("%.4f", worst)};
}

Outcome benchmark_course() {
  std::vector<Cell> cells{{build_course(0, 0), 'A', ControllerConfig::type1()}};
  for (double m : {0.0, 5.0, 10.0, 15.0}) cells.push_back({build_course(0, 0), 'A', ControllerConfig::interval(m)});
  MatrixOptions opt;
  opt.workers = workers();
  const MatrixOutcome out = run_matrix(cells, opt);
  bool ok = out.failures.empty() && out.batches.size() == cells.size();
  std::string detail;
  for (const auto& b : out.batches) {
    const bool cell_ok = b.completion_count() == 30 && b.mean_rmse() < 0.5;
    ok = ok && cell_ok;
    detail += b.cell.controller.tag() + " " + std::to_string(b.completion_count()) + "/30 " +
              fmt("%.4f", b.mean_rmse()) + "; ";
  }
  return {ok, detail};
}

Outcome matrix_cardinality() {
  const std::size_t n = expand_matrix(ExperimentMatrix{}).size();
  return {n == 324, std::to_string(n) + " cells"};
}

// Mean over the nine wind configs of each FOU size's batch mean RMSE.
Outcome fou_curve(std::size_t runs) {
  std::vector<Cell> cells;
  const std::vector<double> sizes{0, 5, 10, 15, 20, 25};
  for (const auto& w : wind_configs()) {
    for (double m : sizes) cells.push_back({build_course(1, 50), w.label, ControllerConfig::interval(m)});
  }
  MatrixOptions opt;
  opt.batch.runs = runs;
  opt.workers = workers();
  opt.warn = [](const std::string&) {};
  const MatrixOutcome out = run_matrix(cells, opt);
  if (!out.failures.empty()) return {false, out.failures.front().cell + ": " + out.failures.front().message};
  std::vector<double> curve(sizes.size(), 0.0);
  for (const auto& b : out.batches) {
    const auto it = std::find(sizes.begin(), sizes.end(), b.cell.controller.fou_size);
    curve[static_cast<std::size_t>(it - sizes.begin())] += b.mean_rmse() / 9.0;
  }
  const double m0 = curve[0];
  const double best = std::min({curve[2], curve[3], curve[4]});
  const bool ok = best <= m0 && curve[5] >= best;
  std::string detail = "runs " + std::to_string(runs) + ", mean RMSE by FOU";
  for (std::size_t i = 0; i < sizes.size(); ++i) detail += fmt(" %g:", sizes[i]) + fmt("%.3f", curve[i]);
  return {ok, detail};
}

Outcome smoke_determinism(const fs::path& first) {
  HarnessConfig cfg;
  const auto cells = matrix_with_baselines(cfg);
  const fs::path second = scratch("smoke_b");
  std::string detail;
  bool ok = true;
  for (const fs::path& dir : {first, second}) {
    const ResultStore store(dir);
    MatrixOptions opt;
    opt.batch.runs = kSmokeRunsPerBatch;
    opt.batch.base_seed = cfg.matrix.base_seed;
    opt.batch.store = &store;
    opt.batch.write_run_logs = dir == first;
    opt.workers = workers();
    opt.warn = [](const std::string&) {};
    const MatrixOutcome out = run_matrix(cells, opt);
    ok = ok && out.failures.empty() && out.batches.size() == cells.size();
  }
  const std::string a = slurp(ResultStore(first).summary_path());
  const std::string b = slurp(ResultStore(second).summary_path());
  fs::remove_all(second);
  ok = ok && !a.empty() && a == b;
  detail = std::to_string(cells.size()) + " cells x " + std::to_string(kSmokeRunsPerBatch) + " runs, summary " +
           std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different");
  return {ok, detail};
}

Outcome wind_bounds(const fs::path& store_dir) {
  std::size_t samples = 0, outside = 0, files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(store_dir / "runs")) {
    if (!entry.is_regular_file()) continue;
    ++files;
    // runs/<course>_<wind>_<controller>/run_NNN.csv
    const std::string cell = entry.path().parent_path().filename().string();
    const char w = cell.at(cell.find('_') + 1);
    const WindConfig& cfg = wind_config(w);
    std::ifstream in(entry.path());
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      std::vector<double> v;
      std::stringstream row(line);
      for (std::string f; std::getline(row, f, ',');) v.push_back(std::stod(f));
      if (v.size() != 11) return {false, "malformed row in " + entry.path().string()};
      ++samples;
      if (!cfg.direction.contains(v[9]) || !cfg.speed.contains(v[10])) ++outside;
    }
  }
  return {files > 0 && outside == 0, std::to_string(outside) + " of " + std::to_string(samples) +
                                         " samples outside bounds in " + std::to_string(files) + " logs"};
}

Outcome fou_zero_end_to_end() {
  const Cell t1{build_course(1, 25), 'A', ControllerConfig::type1()};
  const Cell t2{build_course(1, 25), 'A', ControllerConfig::interval(0)};
  BatchOptions opt;
  const BatchResult a = run_batch(t1, opt);
  const BatchResult b = run_batch(t2, opt);
  const auto ra = a.rmse_values();
  const auto rb = b.rmse_values();
  bool seeds = true;
  for (std::size_t i = 0; i < a.runs.size(); ++i) seeds = seeds && a.runs[i].seed == b.runs[i].seed;
  const bool same = ra == rb;
  const ComparisonRow row = compare_batches(a, b);
  return {seeds && same && row.degenerate,
          std::string("shared seeds ") + (seeds ? "yes" : "no") + ", identical RMSE lists " + (same ? "yes" : "no") +
              ", degenerate " + (row.degenerate ? "yes" : "no") + fmt(", p %.3f", row.p_value)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, double limit_s, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
      o.pass = false;
      o.detail += fmt(" (over %.0f s limit)", limit_s);
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  const fs::path smoke = scratch("smoke_a");
  report(1, "FOU-zero equivalence", 5, fou_zero_surface);
  report(2, "KM oracle", 10, km_oracle);
  report(3, "Wilcoxon exactness", 0, wilcoxon_exactness);
  report(4, "benchmark course", 30, benchmark_course);
  report(5, "matrix cardinality", 0, matrix_cardinality);
  report(6, "FOU curve (smoke)", 0, [] { return fou_curve(kSmokeRunsPerBatch); });
  report(6, "FOU curve (full)", 600, [] { return fou_curve(kCanonicalRunsPerBatch); });
  report(7, "determinism", 0, [&] { return smoke_determinism(smoke); });
  report(8, "wind bounds", 0, [&] { return wind_bounds(smoke); });
  report(9, "FOU-zero end to end", 0, fou_zero_end_to_end);
  fs::remove_all(smoke);

  std::printf("%d criterion check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
