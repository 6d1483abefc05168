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

#include "it2sail/helm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace it2sail {

namespace {
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
}

double distance(Vec2 a, Vec2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

double wrap_signed(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r <= -180.0) r += 360.0;
  if (r > 180.0) r -= 360.0;
  return r;
}

double wrap_compass(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

double bearing(Vec2 from, Vec2 to) {
  return wrap_compass(std::atan2(to.x - from.x, to.y - from.y) * kDegPerRad);
}

void ControllerConfig::validate() const {
  if (!std::isfinite(fou_size) || fou_size < 0.0) throw std::invalid_argument("FOU size must be >= 0");
  if (!(rudder_limit > 0.0)) throw std::invalid_argument("rudder limit must be positive");
  if (grid_points < kDefaultGridPoints) throw std::invalid_argument("output grid needs at least 201 points");
}

std::string ControllerConfig::tag() const {
  if (kind == ControllerKind::Type1) return "t1";
  char buf[32];
  std::snprintf(buf, sizeof buf, "t2-%g", fou_size);
  return buf;
}

ControllerConfig ControllerConfig::parse_tag(const std::string& tag) {
  if (tag == "t1") return type1();
  if (tag.rfind("t2-", 0) == 0) {
    std::size_t used = 0;
    double m = 0.0;
    try {
      m = std::stod(tag.substr(3), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tag.size() - 3 && used > 0) {
      ControllerConfig cfg = interval(m);
      cfg.validate();
      return cfg;
    }
  }
  throw std::invalid_argument("controller tag must be 't1' or 't2-<fou>', got '" + tag + "'");
}

HeadingErrors compute_errors(double current_heading, Vec2 boat, Vec2 waypoint, double previous_error) {
  HeadingErrors out;
  if (boat == waypoint) {
    out.desired = wrap_compass(current_heading);
    out.error = 0.0;
  } else {
    out.desired = bearing(boat, waypoint);
    out.error = wrap_signed(out.desired - current_heading);
  }
  out.delta = wrap_signed(out.error - previous_error);
  return out;
}

RuleBase default_rulebase() {
  RuleBase::Matrix m{};
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      m[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j + 2)] =
          static_cast<std::int8_t>(std::clamp(i + j, -2, 2));
    }
  }
  return RuleBase(m);
}

HelmController::HelmController(ControllerConfig config, InputBanks banks, MFBank output_bank, RuleBase rules)
    : config_(config), banks_(std::move(banks)), output_(std::move(output_bank)), rules_(std::move(rules)) {
  config_.validate();
  if (config_.kind == ControllerKind::IntervalType2) blurred_ = blur_banks(banks_, config_.fou_size);
}

Defuzzified HelmController::rudder_change(double error, double delta) const {
  if (!blurred_) {
    return centroid_defuzz(infer_t1(rules_, error, delta, banks_, output_, config_.grid_points));
  }
  const auto c = km_type_reduce(infer_it2(rules_, error, delta, *blurred_, output_, config_.grid_points));
  return {defuzz_interval(c), c.vacuous};
}

HelmStep HelmController::step(const HelmState& state, double error, double delta) const {
  const Defuzzified out = rudder_change(error, delta);
  HelmStep result;
  result.vacuous = out.vacuous;
  result.rudder_change = out.vacuous ? 0.0 : out.value;
  result.state.previous_error = error;
  result.state.rudder =
      std::clamp(state.rudder + result.rudder_change, -config_.rudder_limit, config_.rudder_limit);
  return result;
}

HelmStep step_controller(const ControllerConfig& cfg, const HelmState& state, double error, double delta) {
  return HelmController(cfg).step(state, error, delta);
}

}  // namespace it2sail
