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

#include <benchmark/benchmark.h>

#include "it2sail/helm.hpp"
#include "it2sail/interval.hpp"

namespace {

using namespace it2sail;

void BM_InferT1(benchmark::State& state) {
  const RuleBase rules = default_rulebase();
  const InputBanks banks{default_error_bank(), default_delta_bank()};
  const MFBank out = default_output_bank();
  double e = -80;
  for (auto _ : state) {
    benchmark::DoNotOptimize(centroid_defuzz(infer_t1(rules, e, 0.3 * e, banks, out)).value);
    e = e > 80 ? -80 : e + 1.7;
  }
}
BENCHMARK(BM_InferT1);

void BM_InferIt2WithKM(benchmark::State& state) {
  const RuleBase rules = default_rulebase();
  const IntervalInputBanks banks = blur_banks({default_error_bank(), default_delta_bank()}, state.range(0));
  const MFBank out = default_output_bank();
  double e = -80;
  for (auto _ : state) {
    benchmark::DoNotOptimize(defuzz_interval(km_type_reduce(infer_it2(rules, e, 0.3 * e, banks, out))));
    e = e > 80 ? -80 : e + 1.7;
  }
}
BENCHMARK(BM_InferIt2WithKM)->Arg(0)->Arg(10)->Arg(25);

}  // namespace
