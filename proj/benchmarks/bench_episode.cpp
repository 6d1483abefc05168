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

#include "it2sail/sim.hpp"

namespace {

using namespace it2sail;

void BM_EpisodeDouble50(benchmark::State& state) {
  const CourseSpec course = build_course(2, 50);
  const HelmController ctrl(state.range(0) < 0 ? ControllerConfig::type1()
                                               : ControllerConfig::interval(static_cast<double>(state.range(0))));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_episode(course, wind_config('I'), ctrl, seed++).rmse);
}
BENCHMARK(BM_EpisodeDouble50)->Arg(-1)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
