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

#include "it2sail/store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace it2sail {

namespace fs = std::filesystem;

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void ensure_dir(const fs::path& dir, const Cell& cell) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cell " + cell.id() + ": cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path& path, const std::string& what) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(what + ": cannot write " + path.string());
  return out;
}

void close_checked(std::ofstream& out, const fs::path& path, const std::string& what) {
  out.close();
  if (!out) throw std::runtime_error(what + ": write failed for " + path.string());
}

}  // namespace

bool cell_less(const Cell& a, const Cell& b) {
  auto key = [](const Cell& c) {
    return std::make_tuple(c.wind, c.course.turns, c.course.vertical,
                           c.controller.kind == ControllerKind::IntervalType2, c.controller.fou_size);
  };
  return key(a) < key(b);
}

ResultStore::ResultStore(fs::path root) : root_(std::move(root)) {}

fs::path ResultStore::run_log_path(const Cell& cell, std::size_t run_index) const {
  char name[32];
  std::snprintf(name, sizeof name, "run_%03zu.csv", run_index);
  return root_ / "runs" / cell.id() / name;
}

fs::path ResultStore::batch_path(const Cell& cell) const { return root_ / "batches" / (cell.id() + ".csv"); }

void ResultStore::write_run_log(const Cell& cell, std::size_t run_index, const RunRecord& record) const {
  const fs::path path = run_log_path(cell, run_index);
  ensure_dir(path.parent_path(), cell);
  auto out = open_out(path, "cell " + cell.id());
  write_run_csv(out, record);
  close_checked(out, path, "cell " + cell.id());
}

void ResultStore::write_batch(const BatchResult& batch) const {
  const fs::path path = batch_path(batch.cell);
  ensure_dir(path.parent_path(), batch.cell);
  auto out = open_out(path, "cell " + batch.cell.id());
  out << kBatchHeader << '\n';
  const auto& c = batch.cell;
  for (const auto& r : batch.runs) {
    out << c.id() << ',' << c.course.label() << ',' << c.wind << ',' << c.controller.tag() << ','
        << fmt_g(c.controller.fou_size) << ',' << r.run_index << ',' << r.seed << ',' << (r.completed ? 1 : 0) << ','
        << fmt6(r.rmse) << ',' << fmt6(r.elapsed) << '\n';
  }
  close_checked(out, path, "cell " + batch.cell.id());
}

void ResultStore::write_summary(const std::vector<BatchResult>& batches) const {
  std::vector<const BatchResult*> sorted;
  for (const auto& b : batches) sorted.push_back(&b);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BatchResult* a, const BatchResult* b) { return cell_less(a->cell, b->cell); });
  std::error_code ec;
  fs::create_directories(root_, ec);
  const fs::path path = summary_path();
  auto out = open_out(path, "batch summary");
  out << kSummaryHeader << '\n';
  for (const BatchResult* b : sorted) {
    const auto& c = b->cell;
    const double completed_mean = b->mean_rmse(false);
    out << c.id() << ',' << c.course.label() << ',' << c.wind << ',' << c.controller.tag() << ','
        << fmt_g(c.controller.fou_size) << ',' << b->runs.size() << ',' << b->completion_count() << ','
        << fmt6(b->mean_rmse(true)) << ',' << (std::isnan(completed_mean) ? std::string() : fmt6(completed_mean))
        << ',' << (b->canonical() ? 1 : 0) << '\n';
  }
  close_checked(out, path, "batch summary");
}

std::vector<BatchResult> ResultStore::load_batches(double leg_length) const {
  std::vector<BatchResult> out;
  const fs::path dir = root_ / "batches";
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    std::getline(in, line);
    if (line != kBatchHeader) throw std::runtime_error("unexpected header in " + path.string());
    BatchResult batch;
    bool have_cell = false;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const auto f = split_csv(line);
      if (f.size() != 10) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 10 fields");
      }
      try {
        if (!have_cell) {
          batch.cell = Cell::parse(f[1] + ":" + f[2] + ":" + f[3], leg_length);
          have_cell = true;
        }
        RunSummary r;
        r.run_index = std::stoul(f[5]);
        r.seed = std::stoull(f[6]);
        r.completed = f[7] == "1";
        r.rmse = std::stod(f[8]);
        r.elapsed = std::stod(f[9]);
        batch.runs.push_back(r);
      } catch (const std::logic_error& e) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (have_cell) out.push_back(std::move(batch));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BatchResult& a, const BatchResult& b) { return cell_less(a.cell, b.cell); });
  return out;
}

}  // namespace it2sail
