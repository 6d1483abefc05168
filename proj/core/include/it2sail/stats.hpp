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

// Heading RMSE and the one-sided Wilcoxon rank-sum (Mann-Whitney) test used
// to compare batches of runs.

#include <cstddef>
#include <span>

namespace it2sail {

/// sqrt(mean(e^2)). Throws std::invalid_argument on an empty list.
double cumulative_rmse(std::span<const double> errors);

enum class RankSumMethod { Auto, Exact, Normal };

/// Largest combined sample size handled by exact enumeration in Auto mode.
inline constexpr std::size_t kExactRankSumLimit = 12;
inline constexpr std::size_t kMaxExactRankSumSize = 60;

struct RankSumResult {
  double p_value = 0.5;
  double rank_sum = 0.0;  // W, sum of midranks of the first sample
  double u = 0.0;         // W - n_a (n_a + 1) / 2
  RankSumMethod method = RankSumMethod::Exact;
  bool ties = false;
  bool degenerate = false;  // every value identical across both samples
};

/// P-value for the alternative "a is stochastically smaller than b".
///
/// Auto uses exact enumeration of all C(n_a + n_b, n_a) rank assignments when
/// n_a + n_b <= kExactRankSumLimit and there are no ties, otherwise the
/// normal approximation with tie-corrected variance and a 0.5 continuity
/// correction. Forcing Exact with ties, or with more than
/// kMaxExactRankSumSize samples, throws std::invalid_argument. A degenerate
/// input (all values equal) returns p = 0.5 in every mode.
RankSumResult wilcoxon_rank_sum_one_sided(std::span<const double> a, std::span<const double> b,
                                          RankSumMethod method = RankSumMethod::Auto);

/// Standard normal CDF.
double normal_cdf(double z);

}  // namespace it2sail
