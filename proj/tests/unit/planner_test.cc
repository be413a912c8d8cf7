// Copyright 2026 The domobj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "domobj/errors.h"
#include "domobj/planner.h"
#include "fixtures.h"
#include "oracle.h"
#include "random_model.h"

namespace domobj {
namespace {

using Steps = std::vector<std::string>;

class SmartroomPlannerTest : public ::testing::Test {
 protected:
  AdaptiveSystemModel model_ = testing::smartroom();
  DomainConfiguration start_ = initial_configuration(model_);
  PlanOptions options_ = [] {
    PlanOptions o;
    o.requesting_object = "Controller";
    return o;
  }();

  std::optional<domobj::Plan> MakePlan(const std::string& goal) {
    return plan(model_, start_, parse_condition(goal), options_);
  }
};

TEST_F(SmartroomPlannerTest, PrefersFirstDeclaredFragment) {
  auto p = MakePlan("RoomTemp = Comfort");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->step_names(), Steps{"Hvac.CoolByHvac"});
  EXPECT_EQ(to_string(p->origin_goal), "RoomTemp = Comfort");
}

TEST_F(SmartroomPlannerTest, FallsBackWhenPreconditionFails) {
  start_.set("HvacStatus", "Broken");
  auto p = MakePlan("RoomTemp = Comfort");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->step_names(), Steps{"Window.CoolByWindow"});
}

TEST_F(SmartroomPlannerTest, ChainsFragments) {
  start_.set("HvacStatus", "Broken");
  auto p = MakePlan("RoomTemp = Comfort && WindowState = Closed");
  ASSERT_TRUE(p);
  EXPECT_EQ(p->step_names(), (Steps{"Window.CoolByWindow", "Window.CloseWindow"}));
  EXPECT_EQ(simulate_plan(model_, *p, start_, options_).to_string(),
            "HvacStatus=Broken WindowState=Closed RoomTemp=Comfort");

  options_.max_plan_length = 1;
  EXPECT_FALSE(MakePlan("RoomTemp = Comfort && WindowState = Closed"));
}

TEST_F(SmartroomPlannerTest, GoalAlreadyHolds) {
  auto p = MakePlan("RoomTemp = Hot");
  ASSERT_TRUE(p);
  EXPECT_TRUE(p->steps.empty());
}

TEST_F(SmartroomPlannerTest, Unreachable) { EXPECT_FALSE(MakePlan("HvacStatus = Broken")); }

TEST_F(SmartroomPlannerTest, RequesterFragmentsExcludedUnlessAllowed) {
  options_.requesting_object = "Hvac";
  EXPECT_EQ(MakePlan("RoomTemp = Comfort")->step_names(), Steps{"Window.CoolByWindow"});
  options_.allow_self_fragments = true;
  EXPECT_EQ(MakePlan("RoomTemp = Comfort")->step_names(), Steps{"Hvac.CoolByHvac"});
}

TEST_F(SmartroomPlannerTest, SimulateRejectsUnsoundPlans) {
  Plan bogus{{{"Window", "CloseWindow"}}, parse_condition("WindowState = Closed")};
  EXPECT_THROW(simulate_plan(model_, bogus, start_, options_), PlannerSoundnessError);
  Plan misses{{{"Hvac", "CoolByHvac"}}, parse_condition("RoomTemp = Cold")};
  EXPECT_THROW(simulate_plan(model_, misses, start_, options_), PlannerSoundnessError);
}

TEST_F(SmartroomPlannerTest, SymbolicExecution) {
  const auto* f = model_.find_object("Window")->find_fragment("CoolByWindow");
  auto after = symbolic_execute_fragment(model_, *f, start_, options_);
  ASSERT_TRUE(after);
  EXPECT_EQ(after->to_string(), "HvacStatus=Operational WindowState=Open RoomTemp=Comfort");
  EXPECT_FALSE(symbolic_execute_fragment(model_, *f, *after, options_));
}

// Exact agreement with exhaustive enumeration, including which of several
// shortest plans is chosen.
TEST(PlannerOracleTest, MatchesEnumeration) {
  std::mt19937_64 rng(20261016);
  PlanOptions options;
  options.max_plan_length = 4;
  int found = 0;
  int none = 0;
  for (int i = 0; i < 150; ++i) {
    auto model = testing::random_model(rng);
    ASSERT_TRUE(validate_model(model).empty()) << i;
    for (int g = 0; g < 4; ++g) {
      auto start = testing::random_configuration(rng, model);
      auto goal = testing::random_goal(rng, model);
      auto got = plan(model, start, goal, options);
      auto want = testing::enumerate_plan(model, start, goal, 4);
      ASSERT_EQ(got.has_value(), want.has_value()) << "model " << i << " goal " << to_string(goal);
      if (got) {
        EXPECT_EQ(got->step_names(), *want);
        EXPECT_NO_THROW(simulate_plan(model, *got, start, options));
        ++found;
      } else {
        ++none;
      }
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(none, 0);
}

}  // namespace
}  // namespace domobj
