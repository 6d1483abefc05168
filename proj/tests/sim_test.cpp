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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "it2sail/rng.hpp"
#include "it2sail/sim.hpp"
#include "it2sail/stats.hpp"

namespace it2sail {
namespace {

double leg_angle(const CourseSpec& c, std::size_t i) {
  const Vec2 a = c.waypoints[i], b = c.waypoints[i + 1];
  return std::atan2(b.y - a.y, b.x - a.x) * 180.0 / std::numbers::pi;
}

TEST(SplitMix64, KnownFirstOutputsAndDeterminism) {
  // Reference SplitMix64 outputs for seed 0.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(r.next(), 0x6e789e6aa1b965f4ULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(SplitMix64, UniformAndGaussianMoments) {
  SplitMix64 r(7);
  double su = 0, sg = 0, sg2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
  }
  for (int i = 0; i < n; ++i) {
    const double g = r.gaussian();
    sg += g;
    sg2 += g * g;
  }
  EXPECT_NEAR(su / n, 0.5, 0.005);
  EXPECT_NEAR(sg / n, 0.0, 0.01);
  EXPECT_NEAR(sg2 / n, 1.0, 0.02);
}

TEST(Course, WaypointGeometry) {
  const CourseSpec s0 = build_course(0, 0);
  ASSERT_EQ(s0.waypoints.size(), 2u);
  EXPECT_EQ(s0.waypoints[1], (Vec2{500, 0}));
  EXPECT_EQ(s0.label(), "Single-0");

  const CourseSpec s25 = build_course(1, 25);
  EXPECT_EQ(s25.label(), "Single-25");
  EXPECT_NEAR(leg_angle(s25, 1), 5.710593137499643, 1e-9);

  const CourseSpec d50 = build_course(2, 50);
  ASSERT_EQ(d50.waypoints.size(), 4u);
  EXPECT_EQ(d50.label(), "Double-50");
  EXPECT_NEAR(leg_angle(d50, 1) - leg_angle(d50, 2), 2 * std::atan(50.0 / 250.0) * 180 / std::numbers::pi, 1e-9);
  EXPECT_NEAR(leg_angle(d50, 1) - leg_angle(d50, 2), 22.61986494804042, 1e-9);
  EXPECT_EQ(d50.waypoints[3], (Vec2{750, 0}));
}

TEST(Course, RejectsInvalidCombinations) {
  EXPECT_THROW(build_course(0, 25), std::invalid_argument);
  EXPECT_THROW(build_course(1, 0), std::invalid_argument);
  EXPECT_THROW(build_course(3, 50), std::invalid_argument);
  EXPECT_THROW(build_course(1, 30), std::invalid_argument);
  EXPECT_THROW(parse_course("Triple-50"), std::invalid_argument);
  EXPECT_THROW(parse_course("Single-x"), std::invalid_argument);
  EXPECT_EQ(parse_course("Double-100").turns, 2);
  EXPECT_EQ(parse_course("Single-0").turns, 0);
  EXPECT_EQ(parse_course("Single-50").turns, 1);
}

TEST(WindConfigs, TableLevelsAndScores) {
  const auto& t = wind_configs();
  const char* labels = "ABCDEFGHI";
  const int speed[] = {0, 1, 0, 1, 2, 0, 2, 1, 2};
  const int dir[] = {0, 0, 1, 1, 0, 2, 1, 2, 2};
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(t[i].label, labels[i]);
    EXPECT_EQ(t[i].speed_score(), speed[i]);
    EXPECT_EQ(t[i].direction_score(), dir[i]);
  }
  EXPECT_EQ(wind_config('I').uncertainty_score(), 4);
  EXPECT_THROW(wind_config('J'), std::invalid_argument);
  EXPECT_DOUBLE_EQ(speed_bounds(WindLevel::High).lower, 1.0);
  EXPECT_DOUBLE_EQ(speed_bounds(WindLevel::High).upper, 13.0);
  EXPECT_DOUBLE_EQ(direction_bounds(WindLevel::Low).lower, 160.0);
  EXPECT_DOUBLE_EQ(direction_bounds(WindLevel::High).upper, 220.0);
}

TEST(SampleWind, ConstantForConfigAAndWithinBoundsOtherwise) {
  SplitMix64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Wind w = sample_wind(wind_config('A'), rng);
    EXPECT_EQ(w.direction_from, 180.0);
    EXPECT_EQ(w.speed, 7.0);
  }
  for (const auto& cfg : wind_configs()) {
    SplitMix64 r(1234);
    for (int i = 0; i < 10000; ++i) {
      const Wind w = sample_wind(cfg, r);
      ASSERT_TRUE(cfg.direction.contains(w.direction_from)) << cfg.label;
      ASSERT_TRUE(cfg.speed.contains(w.speed)) << cfg.label;
    }
  }
}

TEST(SampleWind, StreamConsumptionIndependentOfConfig) {
  SplitMix64 a(5), b(5);
  sample_wind(wind_config('A'), a);
  sample_wind(wind_config('I'), b);
  EXPECT_EQ(a.state(), b.state());
}

TEST(Polar, TableAndInterpolation) {
  EXPECT_DOUBLE_EQ(polar_factor(0), 0.0);
  EXPECT_DOUBLE_EQ(polar_factor(30), 0.0);
  EXPECT_DOUBLE_EQ(polar_factor(65), 0.15);
  EXPECT_DOUBLE_EQ(polar_factor(90), 0.30);
  EXPECT_DOUBLE_EQ(polar_factor(120), 0.35);
  EXPECT_DOUBLE_EQ(polar_factor(180), 0.25);
  // Beam reach east in a 7 m/s southerly.
  EXPECT_NEAR(polar_speed(7, off_wind_angle(90, 180)), 2.1, 1e-12);
  EXPECT_DOUBLE_EQ(off_wind_angle(350, 10), 20);
}

TEST(Physics, RudderTurnRateAndStraightLine) {
  BoatState s;
  s.heading = 90;
  s.speed = 2.1;
  s.rudder = 10;
  const Wind w{180, 7};
  const BoatState n = step_physics(s, w, 0.25);
  EXPECT_NEAR(n.heading, 91.25, 1e-12);
  EXPECT_NEAR(n.position.x, 2.1 * 0.25, 1e-12);
  EXPECT_NEAR(n.position.y, 0.0, 1e-12);
  EXPECT_NEAR(n.speed, 2.1, 1e-12);

  s.speed = 0.5;  // quarter authority
  EXPECT_NEAR(step_physics(s, w, 0.25).heading, 90 + 1.25 / 4, 1e-12);
}

TEST(Physics, SpeedRelaxesExponentially) {
  BoatState s;
  s.heading = 90;
  s.speed = 0;
  const Wind w{180, 7};
  for (int i = 0; i < 12; ++i) s = step_physics(s, w, 0.25);  // 3 s
  EXPECT_NEAR(s.speed, 2.1 * (1 - std::exp(-1.0)), 1e-9);
}

TEST(Physics, ValidateRejectsFractionalPeriods) {
  PhysicsParams p;
  p.control_period = 0.3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.timeout = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Episode, StraightCourseInSteadyWind) {
  const RunRecord r = run_episode(build_course(0, 0), wind_config('A'), ControllerConfig::type1(), 17);
  EXPECT_TRUE(r.completed);
  EXPECT_EQ(r.waypoints_reached, 1u);
  EXPECT_NEAR(r.rmse, 0.0, 1e-9);
  // 490 m at 2.1 m/s, rounded up to the physics step.
  EXPECT_NEAR(r.elapsed, 233.5, 0.5);
  EXPECT_EQ(r.log.front().t, 0.0);
  EXPECT_NEAR(r.log[1].t, 1.0, 1e-12);
}

TEST(Episode, DeterministicForSeed) {
  const CourseSpec c = build_course(2, 50);
  const RunRecord a = run_episode(c, wind_config('I'), ControllerConfig::interval(10), 4242);
  const RunRecord b = run_episode(c, wind_config('I'), ControllerConfig::interval(10), 4242);
  ASSERT_EQ(a.log.size(), b.log.size());
  EXPECT_EQ(a.rmse, b.rmse);
  for (std::size_t i = 0; i < a.log.size(); ++i) {
    EXPECT_EQ(a.log[i].boat.position.x, b.log[i].boat.position.x);
    EXPECT_EQ(a.log[i].wind.speed, b.log[i].wind.speed);
  }
  const RunRecord other = run_episode(c, wind_config('I'), ControllerConfig::interval(10), 4243);
  EXPECT_NE(a.log[10].wind.speed, other.log[10].wind.speed);
}

TEST(Episode, ZeroFouReproducesTypeOneTrajectory) {
  const CourseSpec c = build_course(1, 50);
  const RunRecord t1 = run_episode(c, wind_config('H'), ControllerConfig::type1(), 99);
  const RunRecord t2 = run_episode(c, wind_config('H'), ControllerConfig::interval(0), 99);
  ASSERT_EQ(t1.log.size(), t2.log.size());
  for (std::size_t i = 0; i < t1.log.size(); ++i) {
    ASSERT_NEAR(t1.log[i].boat.position.x, t2.log[i].boat.position.x, 1e-6);
    ASSERT_NEAR(t1.log[i].boat.heading, t2.log[i].boat.heading, 1e-6);
  }
  EXPECT_NEAR(t1.rmse, t2.rmse, 1e-9);
}

TEST(Episode, RmseMatchesLoggedErrorsAndWindStaysInBounds) {
  const WindConfig& cfg = wind_config('G');
  const RunRecord r = run_episode(build_course(2, 100), cfg, ControllerConfig::interval(5), 555);
  std::vector<double> errors;
  for (const auto& row : r.log) {
    errors.push_back(row.error);
    EXPECT_TRUE(cfg.direction.contains(row.wind.direction_from));
    EXPECT_TRUE(cfg.speed.contains(row.wind.speed));
    EXPECT_LE(std::abs(row.boat.rudder), 30.0);
  }
  double sq = 0;
  for (double e : errors) sq += e * e;
  EXPECT_NEAR(r.rmse, std::sqrt(sq / errors.size()), 1e-9);
}

TEST(Episode, TimeoutStopsAtLimit) {
  PhysicsParams p;
  p.timeout = 20;
  const RunRecord r = run_episode(build_course(1, 100), wind_config('A'), ControllerConfig::type1(), 1, p);
  EXPECT_FALSE(r.completed);
  EXPECT_DOUBLE_EQ(r.elapsed, 20.0);
  EXPECT_EQ(r.log.size(), 20u);
}

TEST(RunCsv, HeaderAndRowCount) {
  PhysicsParams p;
  p.timeout = 5;
  const RunRecord r = run_episode(build_course(1, 25), wind_config('B'), ControllerConfig::type1(), 3, p);
  std::ostringstream out;
  write_run_csv(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kRunLogHeader);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
  }
  EXPECT_EQ(rows, r.log.size());
}

}  // namespace
}  // namespace it2sail
