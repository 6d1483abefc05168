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

// Heading controller: turns boat/waypoint geometry into (error, delta-error)
// and runs the type-1 or interval type-2 pipeline once per control cycle to
// produce an incremental rudder change.

#include <optional>
#include <string>

#include "it2sail/fuzzy.hpp"
#include "it2sail/interval.hpp"

namespace it2sail {

struct Vec2 {
  double x = 0.0;  // metres east
  double y = 0.0;  // metres north

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double distance(Vec2 a, Vec2 b);

/// Wraps an angle in degrees to (-180, 180].
double wrap_signed(double degrees);
/// Normalizes a compass angle to [0, 360).
double wrap_compass(double degrees);
/// Compass bearing (0 = north, 90 = east) from `from` to `to`.
double bearing(Vec2 from, Vec2 to);

enum class ControllerKind { Type1, IntervalType2 };

struct ControllerConfig {
  ControllerKind kind = ControllerKind::Type1;
  double fou_size = 0.0;      // horizontal movement in degrees; ignored for Type1
  double rudder_limit = 30.0;
  std::size_t grid_points = kDefaultGridPoints;

  static ControllerConfig type1() { return {}; }
  static ControllerConfig interval(double fou_size) { return {ControllerKind::IntervalType2, fou_size}; }

  /// Throws std::invalid_argument on negative FOU, non-positive limit or a
  /// grid coarser than kDefaultGridPoints.
  void validate() const;

  /// "t1" or "t2-<fou>", e.g. "t2-20".
  std::string tag() const;
  static ControllerConfig parse_tag(const std::string& tag);

  friend bool operator==(const ControllerConfig&, const ControllerConfig&) = default;
};

struct HelmState {
  double previous_error = 0.0;
  double rudder = 0.0;
};

struct HeadingErrors {
  double desired = 0.0;
  double error = 0.0;
  double delta = 0.0;
};

/// error = desired - current, delta = error - previous_error, both wrapped to
/// (-180, 180]. Coincident boat and waypoint give zero error toward the
/// current heading.
HeadingErrors compute_errors(double current_heading, Vec2 boat, Vec2 waypoint, double previous_error);

/// Macvicar-Whelan PD matrix: consequent = clamp(error_index + delta_index, -2, 2).
RuleBase default_rulebase();

struct HelmStep {
  double rudder_change = 0.0;
  HelmState state;
  bool vacuous = false;  // defuzzifier saw an empty output set; change forced to 0
};

/// Owns the (possibly blurred) banks for one controller configuration so the
/// per-cycle step does no setup work.
class HelmController {
 public:
  explicit HelmController(ControllerConfig config, InputBanks banks = {default_error_bank(), default_delta_bank()},
                          MFBank output_bank = default_output_bank(), RuleBase rules = default_rulebase());

  const ControllerConfig& config() const { return config_; }

  /// Crisp rudder change for the given inputs, without touching any state.
  Defuzzified rudder_change(double error, double delta) const;

  HelmStep step(const HelmState& state, double error, double delta) const;

 private:
  ControllerConfig config_;
  InputBanks banks_;
  std::optional<IntervalInputBanks> blurred_;
  MFBank output_;
  RuleBase rules_;
};

/// One-shot form of HelmController::step with the default banks and rules.
HelmStep step_controller(const ControllerConfig& cfg, const HelmState& state, double error, double delta);

}  // namespace it2sail
