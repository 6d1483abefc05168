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

#include <cstdint>

namespace it2sail {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, Weyl increment
/// 0x9E3779B97F4A7C15 followed by the variant-13 finalizer. Every operation is
/// integer arithmetic or IEEE-754 basic arithmetic plus std::log/std::sqrt, so
/// streams are reproducible across compilers and standard libraries (unlike
/// std::normal_distribution).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via the Marsaglia polar method; the second variate of
  /// each accepted pair is discarded so the generator stays a single word.
  double gaussian();

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 finalizer. A bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

}  // namespace it2sail
