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

#include "it2sail/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace it2sail {

double cumulative_rmse(std::span<const double> errors) {
  if (errors.empty()) throw std::invalid_argument("RMSE of an empty error list");
  double sum = 0.0;
  for (double e : errors) sum += e * e;
  return std::sqrt(sum / static_cast<double>(errors.size()));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

namespace {

struct Ranking {
  std::vector<double> ranks;  // midranks, pooled order a..., b...
  double tie_term = 0.0;      // sum over tie groups of t^3 - t
  bool ties = false;
};

Ranking midranks(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() + b.size();
  std::vector<double> pooled;
  pooled.reserve(n);
  pooled.insert(pooled.end(), a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });

  Ranking r;
  r.ranks.assign(n, 0.0);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double t = static_cast<double>(j - i + 1);
    const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) r.ranks[order[k]] = rank;
    if (t > 1.0) {
      r.ties = true;
      r.tie_term += t * t * t - t;
    }
    i = j + 1;
  }
  return r;
}

// P(W <= observed) where W is the rank sum of na items drawn from ranks 1..n
// without replacement, by counting subsets per (size, sum).
double exact_lower_tail(std::size_t na, std::size_t n, double observed) {
  const std::size_t max_sum = n * (n + 1) / 2;
  std::vector<std::vector<double>> count(na + 1, std::vector<double>(max_sum + 1, 0.0));
  count[0][0] = 1.0;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    for (std::size_t k = std::min(rank, na); k >= 1; --k) {
      for (std::size_t s = max_sum; s >= rank; --s) count[k][s] += count[k - 1][s - rank];
    }
  }
  double favorable = 0.0;
  double total = 0.0;
  for (std::size_t s = 0; s <= max_sum; ++s) {
    total += count[na][s];
    if (static_cast<double>(s) <= observed + 1e-9) favorable += count[na][s];
  }
  return favorable / total;
}

}  // namespace

RankSumResult wilcoxon_rank_sum_one_sided(std::span<const double> a, std::span<const double> b,
                                          RankSumMethod method) {
  if (a.empty() || b.empty()) throw std::invalid_argument("rank-sum test needs two non-empty samples");
  auto finite = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  if (!finite(a) || !finite(b)) throw std::invalid_argument("rank-sum test needs finite values");
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na + nb;
  const double dna = static_cast<double>(na);
  const double dnb = static_cast<double>(nb);
  const double dn = static_cast<double>(n);

  const Ranking ranking = midranks(a, b);
  RankSumResult out;
  out.ties = ranking.ties;
  out.rank_sum = std::accumulate(ranking.ranks.begin(), ranking.ranks.begin() + static_cast<long>(na), 0.0);
  out.u = out.rank_sum - dna * (dna + 1.0) / 2.0;

  const double variance = dna * dnb / 12.0 * ((dn + 1.0) - ranking.tie_term / (dn * (dn - 1.0)));
  if (n < 2 || variance <= 0.0) {
    out.p_value = 0.5;
    out.degenerate = true;
    out.method = method == RankSumMethod::Exact ? RankSumMethod::Exact : RankSumMethod::Normal;
    return out;
  }

  if (method == RankSumMethod::Auto) {
    method = (n <= kExactRankSumLimit && !ranking.ties) ? RankSumMethod::Exact : RankSumMethod::Normal;
  }
  out.method = method;

  if (method == RankSumMethod::Exact) {
    if (ranking.ties) throw std::invalid_argument("exact rank-sum enumeration requires untied samples");
    if (n > kMaxExactRankSumSize) throw std::invalid_argument("too many samples for exact rank-sum enumeration");
    out.p_value = exact_lower_tail(na, n, out.rank_sum);
    return out;
  }

  const double mean = dna * dnb / 2.0;
  const double z = (out.u - mean + 0.5) / std::sqrt(variance);
  out.p_value = normal_cdf(z);
  return out;
}

}  // namespace it2sail
