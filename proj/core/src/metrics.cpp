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

#include "it2sail/metrics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace it2sail {

std::string Cell::environment_id() const { return course.label() + "_" + std::string(1, wind); }

std::string Cell::id() const { return environment_id() + "_" + controller.tag(); }

bool Cell::same_environment(const Cell& other) const {
  return wind == other.wind && course.turns == other.course.turns && course.vertical == other.course.vertical &&
         course.waypoints == other.course.waypoints;
}

Cell Cell::parse(const std::string& spec, double leg_length) {
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
  if (second == std::string::npos || spec.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("cell spec must be <course>:<wind>:<controller>, got '" + spec + "'");
  }
  const std::string wind = spec.substr(first + 1, second - first - 1);
  if (wind.size() != 1) throw std::invalid_argument("wind configuration must be a single letter A..I");
  Cell cell;
  cell.course = parse_course(spec.substr(0, first), leg_length);
  cell.wind = wind_config(wind[0]).label;
  cell.controller = ControllerConfig::parse_tag(spec.substr(second + 1));
  return cell;
}

std::size_t BatchResult::completion_count() const {
  std::size_t n = 0;
  for (const auto& r : runs) n += r.completed ? 1 : 0;
  return n;
}

std::vector<double> BatchResult::rmse_values(bool include_incomplete) const {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) {
    if (include_incomplete || r.completed) out.push_back(r.rmse);
  }
  return out;
}

double BatchResult::mean_rmse(bool include_incomplete) const {
  const auto v = rmse_values(include_incomplete);
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

ComparisonRow compare_batches(const BatchResult& t1, const BatchResult& t2, const ComparisonOptions& options) {
  if (!t1.cell.same_environment(t2.cell)) {
    throw std::invalid_argument("cannot compare batches from different cells: " + t1.cell.id() + " vs " +
                                t2.cell.id());
  }
  const auto a = t2.rmse_values(options.include_incomplete);
  const auto b = t1.rmse_values(options.include_incomplete);
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("no qualifying runs to compare in " + t1.cell.id() + " vs " + t2.cell.id());
  }
  ComparisonRow row;
  row.wind_config = t1.cell.wind;
  row.course = t1.cell.course.label();
  row.turns = t1.cell.course.turns;
  row.vertical = t1.cell.course.vertical;
  row.t1_mean_rmse = t1.mean_rmse(options.include_incomplete);
  row.t2_mean_rmse = t2.mean_rmse(options.include_incomplete);
  row.rmse_difference = row.t2_mean_rmse - row.t1_mean_rmse;
  row.fou_size = t2.cell.controller.kind == ControllerKind::IntervalType2 ? t2.cell.controller.fou_size : 0.0;
  const RankSumResult test = wilcoxon_rank_sum_one_sided(a, b);
  row.p_value = test.p_value;
  row.degenerate = test.degenerate;
  row.significant = test.p_value < options.threshold;
  return row;
}

}  // namespace it2sail
