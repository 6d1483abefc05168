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

#include "it2sail/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "it2sail/stats.hpp"

namespace it2sail {

namespace {
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

std::size_t whole_steps(double period, double dt, const char* what) {
  const double ratio = period / dt;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9) {
    throw std::invalid_argument(std::string(what) + " must be a positive whole multiple of dt");
  }
  return static_cast<std::size_t>(rounded);
}
}  // namespace

std::string_view to_string(WindLevel level) {
  switch (level) {
    case WindLevel::None: return "None";
    case WindLevel::Low: return "Low";
    case WindLevel::High: return "High";
  }
  return "?";
}

Bounds direction_bounds(WindLevel level) {
  switch (level) {
    case WindLevel::None: return {180.0, 180.0};
    case WindLevel::Low: return {160.0, 200.0};
    case WindLevel::High: return {140.0, 220.0};
  }
  throw std::invalid_argument("unknown wind level");
}

Bounds speed_bounds(WindLevel level) {
  switch (level) {
    case WindLevel::None: return {7.0, 7.0};
    case WindLevel::Low: return {4.0, 10.0};
    case WindLevel::High: return {1.0, 13.0};
  }
  throw std::invalid_argument("unknown wind level");
}

const std::array<WindConfig, 9>& wind_configs() {
  using L = WindLevel;
  static const std::array<WindConfig, 9> table = [] {
    // label, speed uncertainty, direction uncertainty
    const std::array<std::tuple<char, L, L>, 9> rows{{
        {'A', L::None, L::None},
        {'B', L::Low, L::None},
        {'C', L::None, L::Low},
        {'D', L::Low, L::Low},
        {'E', L::High, L::None},
        {'F', L::None, L::High},
        {'G', L::High, L::Low},
        {'H', L::Low, L::High},
        {'I', L::High, L::High},
    }};
    std::array<WindConfig, 9> out{};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto [label, speed, dir] = rows[i];
      out[i] = WindConfig{label, speed, dir, direction_bounds(dir), speed_bounds(speed)};
    }
    return out;
  }();
  return table;
}

const WindConfig& wind_config(char label) {
  for (const auto& cfg : wind_configs()) {
    if (cfg.label == label) return cfg;
  }
  throw std::invalid_argument(std::string("unknown wind configuration '") + label + "' (expected A..I)");
}

Wind sample_wind(const WindConfig& cfg, SplitMix64& rng) {
  const double gd = rng.gaussian();
  const double gs = rng.gaussian();
  auto draw = [](const Bounds& b, double g) {
    if (b.width() <= 0.0) return b.lower;
    return std::clamp(b.mid() + g * b.width() / 4.0, b.lower, b.upper);
  };
  return {draw(cfg.direction, gd), draw(cfg.speed, gs)};
}

std::string CourseSpec::label() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s-%g", turns == 2 ? "Double" : "Single", vertical);
  return buf;
}

CourseSpec build_course(int turns, double vertical, double leg_length) {
  const bool known_vertical = vertical == 25.0 || vertical == 50.0 || vertical == 100.0;
  const bool ok = (turns == 0 && vertical == 0.0) || ((turns == 1 || turns == 2) && known_vertical);
  if (!ok) {
    throw std::invalid_argument("invalid course: turns=" + std::to_string(turns) +
                                " vertical=" + std::to_string(vertical));
  }
  if (!(leg_length > 0.0)) throw std::invalid_argument("leg length must be positive");
  CourseSpec c{turns, vertical, {}};
  c.waypoints.push_back({0.0, 0.0});
  switch (turns) {
    case 0:
      c.waypoints.push_back({2.0 * leg_length, 0.0});
      break;
    case 1:
      c.waypoints.push_back({leg_length, 0.0});
      c.waypoints.push_back({2.0 * leg_length, vertical});
      break;
    default:
      c.waypoints.push_back({leg_length, 0.0});
      c.waypoints.push_back({2.0 * leg_length, vertical});
      c.waypoints.push_back({3.0 * leg_length, 0.0});
      break;
  }
  return c;
}

CourseSpec parse_course(const std::string& label, double leg_length) {
  const auto dash = label.find('-');
  if (dash != std::string::npos) {
    const std::string kind = label.substr(0, dash);
    const std::string rest = label.substr(dash + 1);
    std::size_t used = 0;
    double vertical = -1.0;
    try {
      vertical = std::stod(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && used > 0) {
      if (kind == "Single") return build_course(vertical == 0.0 ? 0 : 1, vertical, leg_length);
      if (kind == "Double") return build_course(2, vertical, leg_length);
    }
  }
  throw std::invalid_argument("course label must look like Single-<v> or Double-<v>, got '" + label + "'");
}

void PhysicsParams::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  whole_steps(control_period, dt, "control period");
  whole_steps(wind_period, dt, "wind period");
  if (!(speed_time_constant > 0.0)) throw std::invalid_argument("speed time constant must be positive");
  if (!(full_rudder_speed > 0.0)) throw std::invalid_argument("full rudder speed must be positive");
  if (!(capture_radius > 0.0)) throw std::invalid_argument("capture radius must be positive");
  if (!(timeout > 0.0)) throw std::invalid_argument("timeout must be positive");
  if (!(leg_length > 0.0)) throw std::invalid_argument("leg length must be positive");
}

double polar_factor(double angle) {
  static constexpr std::array<std::pair<double, double>, 5> table{{
      {0.0, 0.0}, {40.0, 0.0}, {90.0, 0.30}, {120.0, 0.35}, {180.0, 0.25}}};
  angle = std::clamp(angle, 0.0, 180.0);
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto [a1, f1] = table[i];
    if (angle <= a1) {
      const auto [a0, f0] = table[i - 1];
      return f0 + (f1 - f0) * (angle - a0) / (a1 - a0);
    }
  }
  return table.back().second;
}

double polar_speed(double wind_speed, double off_wind) { return wind_speed * polar_factor(off_wind); }

double off_wind_angle(double heading, double wind_from) { return std::abs(wrap_signed(heading - wind_from)); }

BoatState step_physics(const BoatState& s, const Wind& wind, double dt, const PhysicsParams& params) {
  BoatState next = s;
  const double authority = std::min(s.speed / params.full_rudder_speed, 1.0);
  next.heading = wrap_compass(s.heading + params.rudder_gain * s.rudder * authority * dt);
  const double h = s.heading * kRadPerDeg;
  next.position.x = s.position.x + s.speed * dt * std::sin(h);
  next.position.y = s.position.y + s.speed * dt * std::cos(h);
  const double target = polar_speed(wind.speed, off_wind_angle(s.heading, wind.direction_from));
  next.speed = std::max(0.0, target + (s.speed - target) * std::exp(-dt / params.speed_time_constant));
  return next;
}

RunRecord run_episode(const CourseSpec& course, const WindConfig& wind_cfg, const ControllerConfig& ctrl,
                      std::uint64_t seed, const PhysicsParams& params) {
  return run_episode(course, wind_cfg, HelmController(ctrl), seed, params);
}

RunRecord run_episode(const CourseSpec& course, const WindConfig& wind_cfg, const HelmController& controller,
                      std::uint64_t seed, const PhysicsParams& params) {
  params.validate();
  if (course.waypoints.size() < 2) throw std::invalid_argument("course needs at least two waypoints");

  const std::size_t control_steps = whole_steps(params.control_period, params.dt, "control period");
  const std::size_t wind_steps = whole_steps(params.wind_period, params.dt, "wind period");
  const auto max_steps = static_cast<std::size_t>(std::ceil(params.timeout / params.dt - 1e-9));
  const auto& wps = course.waypoints;

  RunRecord rec;
  rec.seed = seed;
  rec.log.reserve(static_cast<std::size_t>(params.timeout / params.control_period) + 1);

  SplitMix64 rng(seed);
  Wind wind = sample_wind(wind_cfg, rng);

  BoatState boat;
  boat.position = wps.front();
  boat.heading = bearing(wps[0], wps[1]);
  boat.speed = polar_speed(wind.speed, off_wind_angle(boat.heading, wind.direction_from));
  boat.rudder = 0.0;

  HelmState helm;
  std::size_t target = 1;
  std::size_t step = 0;
  std::vector<double> errors;
  errors.reserve(rec.log.capacity());

  for (;; ++step) {
    if (step > 0 && step % wind_steps == 0) wind = sample_wind(wind_cfg, rng);

    while (target < wps.size() && distance(boat.position, wps[target]) <= params.capture_radius) ++target;
    if (target == wps.size()) {
      rec.completed = true;
      break;
    }
    if (step >= max_steps) break;

    if (step % control_steps == 0) {
      const HeadingErrors e = compute_errors(boat.heading, boat.position, wps[target], helm.previous_error);
      const HelmStep out = controller.step(helm, e.error, e.delta);
      if (out.vacuous) ++rec.vacuous_cycles;
      helm = out.state;
      boat.rudder = helm.rudder;
      rec.log.push_back({static_cast<double>(step) * params.dt, boat, e.desired, e.error, out.rudder_change, wind});
      errors.push_back(e.error);
    }
    boat = step_physics(boat, wind, params.dt, params);
  }

  rec.elapsed = static_cast<double>(step) * params.dt;
  rec.waypoints_reached = target - 1;
  rec.rmse = errors.empty() ? 0.0 : cumulative_rmse(errors);
  return rec;
}

void write_run_csv(std::ostream& out, const RunRecord& record) {
  out << kRunLogHeader << '\n';
  char buf[512];
  for (const auto& r : record.log) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.t,
                  r.boat.position.x, r.boat.position.y, r.boat.heading, r.boat.speed, r.boat.rudder, r.desired,
                  r.error, r.rudder_change, r.wind.direction_from, r.wind.speed);
    out << buf;
  }
}

}  // namespace it2sail
