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

#include "it2sail/helm.hpp"

namespace it2sail {
namespace {

TEST(Angles, WrapSignedHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_signed(180), 180);
  EXPECT_DOUBLE_EQ(wrap_signed(-180), 180);
  EXPECT_DOUBLE_EQ(wrap_signed(190), -170);
  EXPECT_DOUBLE_EQ(wrap_signed(-190), 170);
  EXPECT_DOUBLE_EQ(wrap_signed(720 + 5), 5);
  EXPECT_DOUBLE_EQ(wrap_compass(-10), 350);
  EXPECT_DOUBLE_EQ(wrap_compass(360), 0);
}

TEST(Angles, BearingUsesCompassConvention) {
  EXPECT_NEAR(bearing({0, 0}, {0, 10}), 0, 1e-12);
  EXPECT_NEAR(bearing({0, 0}, {10, 0}), 90, 1e-12);
  EXPECT_NEAR(bearing({0, 0}, {0, -10}), 180, 1e-12);
  EXPECT_NEAR(bearing({0, 0}, {-10, 0}), 270, 1e-12);
  EXPECT_NEAR(distance({0, 0}, {3, 4}), 5, 1e-12);
}

TEST(ComputeErrors, SignAndWrap) {
  // Waypoint due east, boat heading north: turn right, positive error.
  const HeadingErrors a = compute_errors(0, {0, 0}, {100, 0}, 0);
  EXPECT_NEAR(a.desired, 90, 1e-12);
  EXPECT_NEAR(a.error, 90, 1e-12);
  EXPECT_NEAR(a.delta, 90, 1e-12);
  // Across north: desired 10, heading 350.
  const HeadingErrors b = compute_errors(350, {0, 0}, {std::sin(10 * M_PI / 180), std::cos(10 * M_PI / 180)}, 15);
  EXPECT_NEAR(b.error, 20, 1e-9);
  EXPECT_NEAR(b.delta, 5, 1e-9);
  const HeadingErrors c = compute_errors(123, {5, 5}, {5, 5}, 7);
  EXPECT_EQ(c.error, 0.0);
}

TEST(ControllerConfig, TagsRoundTrip) {
  EXPECT_EQ(ControllerConfig::type1().tag(), "t1");
  EXPECT_EQ(ControllerConfig::interval(20).tag(), "t2-20");
  EXPECT_EQ(ControllerConfig::interval(2.5).tag(), "t2-2.5");
  EXPECT_EQ(ControllerConfig::parse_tag("t2-15"), ControllerConfig::interval(15));
  EXPECT_EQ(ControllerConfig::parse_tag("t1"), ControllerConfig::type1());
  EXPECT_THROW(ControllerConfig::parse_tag("t3"), std::invalid_argument);
  EXPECT_THROW(ControllerConfig::parse_tag("t2--4"), std::invalid_argument);
}

TEST(ControllerConfig, ValidateRejectsBadFields) {
  EXPECT_THROW(ControllerConfig::interval(-1).validate(), std::invalid_argument);
  ControllerConfig c;
  c.rudder_limit = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.grid_points = 50;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(HelmController, ZeroInputsHoldRudder) {
  const HelmController h(ControllerConfig::type1());
  const HelmStep s = h.step({0, 12}, 0, 0);
  EXPECT_NEAR(s.rudder_change, 0, 1e-12);
  EXPECT_NEAR(s.state.rudder, 12, 1e-12);
}

TEST(HelmController, RudderSaturatesAtLimit) {
  const HelmController h(ControllerConfig::type1());
  HelmState st;
  for (int i = 0; i < 10; ++i) st = h.step(st, 90, 30).state;
  EXPECT_DOUBLE_EQ(st.rudder, 30);
  for (int i = 0; i < 20; ++i) st = h.step(st, -90, -30).state;
  EXPECT_DOUBLE_EQ(st.rudder, -30);
}

TEST(HelmController, PreviousErrorTracksInput) {
  const HelmStep s = step_controller(ControllerConfig::interval(10), {}, 33, 4);
  EXPECT_DOUBLE_EQ(s.state.previous_error, 33);
  EXPECT_GT(s.rudder_change, 0);
}

TEST(HelmController, ZeroFouMatchesTypeOneSurface) {
  const HelmController t1(ControllerConfig::type1());
  const HelmController t2(ControllerConfig::interval(0));
  for (double e = -180; e <= 180; e += 10) {
    for (double d = -60; d <= 60; d += 10) {
      EXPECT_NEAR(t1.rudder_change(e, d).value, t2.rudder_change(e, d).value, 1e-9);
    }
  }
}

TEST(HelmController, SurfaceIsOddForEveryFou) {
  for (double m : {0.0, 5.0, 10.0, 15.0, 20.0, 25.0}) {
    const HelmController h(ControllerConfig::interval(m));
    for (double e = -90; e <= 90; e += 10) {
      for (double d = -30; d <= 30; d += 6) {
        EXPECT_NEAR(h.rudder_change(e, d).value, -h.rudder_change(-e, -d).value, 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace it2sail
