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

#include "it2sail/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace it2sail {

double Trapezoid::grade(double x) const {
  if (x < left_foot || x > right_foot) return 0.0;
  if (x >= left_shoulder && x <= right_shoulder) return 1.0;
  if (x < left_shoulder) return (x - left_foot) / (left_shoulder - left_foot);
  return (right_foot - x) / (right_foot - right_shoulder);
}

IntervalMF::IntervalMF(TriangularMF source, double shift)
    : source_(source),
      shift_(shift),
      umf_{source.left_foot() - shift, source.apex() - shift, source.apex() + shift,
           source.right_foot() + shift} {
  if (!std::isfinite(shift) || shift < 0.0) {
    throw std::invalid_argument("FOU shift must be a finite value >= 0");
  }
}

double IntervalMF::lower(double x) const {
  return std::min(source_.grade(x - shift_), source_.grade(x + shift_));
}

double IntervalMF::lmf_apex_height() const {
  return std::max(0.0, 1.0 - shift_ / source_.half_width());
}

IntervalMF blur_mf(const TriangularMF& mf, double shift) { return IntervalMF(mf, shift); }

IntervalMFBank::IntervalMFBank(const MFBank& source, double shift) : source_(source), shift_(shift) {
  mfs_.reserve(kTermCount);
  for (const auto& mf : source_.mfs()) mfs_.push_back(blur_mf(mf, shift));
}

IntervalInputBanks blur_banks(const InputBanks& banks, double shift) {
  return {IntervalMFBank(banks.error, shift), IntervalMFBank(banks.delta, shift)};
}

IntervalOutputSet::IntervalOutputSet(UniformGrid grid, std::vector<double> lower, std::vector<double> upper)
    : grid_(grid), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != grid_.size() || upper_.size() != grid_.size()) {
    throw std::invalid_argument("interval output set bounds do not match grid size");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] >= 0.0 && lower_[i] <= upper_[i] && upper_[i] <= 1.0)) {
      throw std::invalid_argument("interval output set requires 0 <= lower <= upper <= 1 at sample " +
                                  std::to_string(i));
    }
  }
}

IntervalOutputSet infer_it2(const RuleBase& rules, double error, double delta,
                            const IntervalInputBanks& banks, const MFBank& output_bank,
                            std::size_t grid_points) {
  const double e = banks.error.clamp(error);
  const double d = banks.delta.clamp(delta);
  std::array<double, kTermCount> el{}, eu{}, dl{}, du{};
  for (std::size_t i = 0; i < kTermCount; ++i) {
    const auto ge = banks.error[i].grade(e);
    const auto gd = banks.delta[i].grade(d);
    el[i] = ge.lower;
    eu[i] = ge.upper;
    dl[i] = gd.lower;
    du[i] = gd.upper;
  }
  const auto fl = consequent_strengths(rules, el, dl);
  const auto fu = consequent_strengths(rules, eu, du);

  UniformGrid grid(output_bank.universe_min(), output_bank.universe_max(), grid_points);
  std::vector<double> lower(grid.size(), 0.0);
  std::vector<double> upper(grid.size(), 0.0);
  for (std::size_t k = 0; k < kTermCount; ++k) {
    if (fu[k] <= 0.0) continue;
    const TriangularMF& mf = output_bank.mfs()[k];
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double mu = mf.grade(grid.at(i));
      lower[i] = std::max(lower[i], std::min(fl[k], mu));
      upper[i] = std::max(upper[i], std::min(fu[k], mu));
    }
  }
  return IntervalOutputSet(grid, std::move(lower), std::move(upper));
}

namespace {

// One endpoint of the centroid interval. For the left endpoint samples at or
// below the running centroid take the upper grade; for the right endpoint
// samples at or above it do. Either way the denominator stays positive.
double km_endpoint(std::span<const double> z, std::span<const double> lower,
                   std::span<const double> upper, bool left) {
  const std::size_t n = z.size();
  // Mathematically every centroid lies inside the span of samples with a
  // positive upper grade; rounding can push a one-sample centroid just past
  // it, which would empty the next split.
  std::size_t first = 0;
  while (upper[first] <= 0.0) ++first;
  std::size_t last = n - 1;
  while (upper[last] <= 0.0) --last;
  auto hull = [&](double v) { return std::clamp(v, z[first], z[last]); };

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = 0.5 * (lower[i] + upper[i]);
    num += z[i] * w;
    den += w;
  }
  double c = hull(num / den);

  // Number of samples assigned to the "left" part for centroid c.
  auto split = [&](double centroid) {
    std::size_t s = 0;
    if (left) {
      while (s < n && z[s] <= centroid) ++s;
    } else {
      while (s < n && z[s] < centroid) ++s;
    }
    return s;
  };

  std::size_t previous = n + 1;
  for (int iter = 0; iter < kMaxTypeReductionIterations; ++iter) {
    const std::size_t s = split(c);
    if (s == previous) return c;
    previous = s;
    num = 0.0;
    den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool use_upper = left ? (i < s) : (i >= s);
      const double w = use_upper ? upper[i] : lower[i];
      num += z[i] * w;
      den += w;
    }
    c = hull(num / den);
  }
  throw std::runtime_error("Karnik-Mendel type reduction did not converge within " +
                           std::to_string(kMaxTypeReductionIterations) + " iterations");
}

}  // namespace

CentroidInterval km_type_reduce(std::span<const double> z, std::span<const double> lower,
                                std::span<const double> upper) {
  if (z.size() < 2 || lower.size() != z.size() || upper.size() != z.size()) {
    throw std::invalid_argument("type reduction needs at least two samples with matching bounds");
  }
  if (!std::is_sorted(z.begin(), z.end())) {
    throw std::invalid_argument("type reduction needs ascending sample positions");
  }
  if (std::all_of(upper.begin(), upper.end(), [](double u) { return u <= 0.0; })) {
    return {0.0, 0.0, true};
  }
  return {km_endpoint(z, lower, upper, true), km_endpoint(z, lower, upper, false), false};
}

CentroidInterval km_type_reduce(const IntervalOutputSet& set) {
  const auto z = set.grid().positions();
  return km_type_reduce(z, set.lower(), set.upper());
}

}  // namespace it2sail
