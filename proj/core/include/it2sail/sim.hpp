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

// Seedable sailing world: course geometry, the bounded Gaussian wind process,
// a first-order kinematic boat and the episode loop that couples them to a
// HelmController.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "it2sail/helm.hpp"
#include "it2sail/rng.hpp"

namespace it2sail {

enum class WindLevel { None = 0, Low = 1, High = 2 };

std::string_view to_string(WindLevel level);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v) const { return v >= lower && v <= upper; }
  double mid() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

/// Direction bounds (degrees, wind-from) for a wind uncertainty level.
Bounds direction_bounds(WindLevel level);
/// Speed bounds (m/s) for a wind uncertainty level.
Bounds speed_bounds(WindLevel level);

struct WindConfig {
  char label = 'A';
  WindLevel speed_level = WindLevel::None;
  WindLevel direction_level = WindLevel::None;
  Bounds direction;
  Bounds speed;

  int speed_score() const { return static_cast<int>(speed_level); }
  int direction_score() const { return static_cast<int>(direction_level); }
  int uncertainty_score() const { return speed_score() + direction_score(); }
};

/// The nine configurations A..I in order.
const std::array<WindConfig, 9>& wind_configs();
/// Throws std::invalid_argument for labels outside A..I.
const WindConfig& wind_config(char label);

struct Wind {
  double direction_from = 180.0;  // compass degrees
  double speed = 0.0;             // m/s
};

/// Gaussian around each channel's midpoint with sigma = width / 4, clipped to
/// the bounds. Always draws two normals so stream consumption does not depend
/// on the configuration.
Wind sample_wind(const WindConfig& cfg, SplitMix64& rng);

struct CourseSpec {
  int turns = 0;
  double vertical = 0.0;
  std::vector<Vec2> waypoints;

  /// "Single-<v>" for zero or one turn, "Double-<v>" for two.
  std::string label() const;
};

inline constexpr double kDefaultLegLength = 250.0;

/// turns 0 needs vertical 0; turns 1 or 2 need vertical in {25, 50, 100}.
CourseSpec build_course(int turns, double vertical, double leg_length = kDefaultLegLength);
/// Inverse of CourseSpec::label.
CourseSpec parse_course(const std::string& label, double leg_length = kDefaultLegLength);

struct BoatState {
  Vec2 position;
  double heading = 90.0;  // compass degrees in [0, 360)
  double speed = 0.0;     // m/s
  double rudder = 0.0;    // degrees
};

/// Tunable constants of the simulated world. Defaults are the reference values.
struct PhysicsParams {
  double dt = 0.25;                    // physics step, s
  double control_period = 1.0;         // s
  double wind_period = 4.0;            // s between wind changes
  double speed_time_constant = 3.0;    // s
  double rudder_gain = 0.5;            // 1/s
  double full_rudder_speed = 2.0;      // m/s at which rudder authority saturates
  double capture_radius = 10.0;        // m
  double timeout = 1800.0;             // s
  double leg_length = kDefaultLegLength;

  /// Checks that the control and wind periods are whole multiples of dt.
  void validate() const;
};

/// Polar drive factor: piecewise-linear through (0,0) (40,0) (90,0.30)
/// (120,0.35) (180,0.25); angles below 40 degrees are the no-go cone.
double polar_factor(double off_wind_angle);
double polar_speed(double wind_speed, double off_wind_angle);
/// Unsigned angle in [0, 180] between the heading and the wind-from direction.
double off_wind_angle(double heading, double wind_from);

BoatState step_physics(const BoatState& state, const Wind& wind, double dt,
                       const PhysicsParams& params = {});

struct LogRow {
  double t = 0.0;
  BoatState boat;
  double desired = 0.0;
  double error = 0.0;
  double rudder_change = 0.0;
  Wind wind;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<LogRow> log;  // one row per control cycle
  bool completed = false;
  double rmse = 0.0;
  double elapsed = 0.0;
  std::size_t waypoints_reached = 0;
  std::size_t vacuous_cycles = 0;
};

RunRecord run_episode(const CourseSpec& course, const WindConfig& wind_cfg, const ControllerConfig& ctrl,
                      std::uint64_t seed, const PhysicsParams& params = {});
/// Same, reusing a prepared controller.
RunRecord run_episode(const CourseSpec& course, const WindConfig& wind_cfg, const HelmController& controller,
                      std::uint64_t seed, const PhysicsParams& params = {});

inline constexpr const char* kRunLogHeader =
    "t,x,y,heading,speed,rudder,desired,error,rudder_change,wind_dir,wind_speed";

/// Header plus one row per control cycle, every value with 6 decimals.
void write_run_csv(std::ostream& out, const RunRecord& record);

}  // namespace it2sail
