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

#include <algorithm>

#include <gtest/gtest.h>

#include "domobj/errors.h"
#include "domobj/model.h"
#include "fixtures.h"

namespace domobj {
namespace {

using testing::smartroom;

std::vector<std::string> Codes(const AdaptiveSystemModel& m) {
  std::vector<std::string> out;
  for (const auto& d : validate_model(m)) out.push_back(d.code);
  return out;
}

bool HasCode(const AdaptiveSystemModel& m, const std::string& code) {
  auto codes = Codes(m);
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

DomainObjectDef& Object(AdaptiveSystemModel& m, const std::string& name) {
  for (auto& o : m.domain_objects) {
    if (o.name == name) return o;
  }
  throw std::out_of_range(name);
}

TEST(ValidatorTest, SmartroomIsClean) { EXPECT_TRUE(validate_model(smartroom()).empty()); }

TEST(ValidatorTest, NoDomainObject) {
  AdaptiveSystemModel m;
  m.name = "empty";
  auto d = validate_model(m);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E001");
  EXPECT_TRUE(has_errors(d));
}

TEST(ValidatorTest, CoreProcessCount) {
  auto m = smartroom();
  Object(m, "Room").core_processes.clear();
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E002"});
  m = smartroom();
  auto& room = Object(m, "Room");
  room.core_processes.push_back(room.core_processes.front());
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E002"});
}

TEST(ValidatorTest, InitialState) {
  auto m = smartroom();
  Object(m, "Hvac").properties[0].initial_state.clear();
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E003"});
  Object(m, "Hvac").properties[0].initial_state = "Melting";
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E003"});
}

TEST(ValidatorTest, NondeterministicProperty) {
  auto m = smartroom();
  auto& p = Object(m, "Hvac").properties[0];
  p.transitions.push_back({"Operational", "fail", "Operational"});
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E004"});
}

TEST(ValidatorTest, DanglingReferences) {
  auto m = smartroom();
  Object(m, "Hvac").external_knowledge.push_back("Humidity");
  EXPECT_TRUE(HasCode(m, "E005"));

  m = smartroom();
  Object(m, "Hvac").external_knowledge.push_back("HvacStatus");
  EXPECT_TRUE(HasCode(m, "E005"));

  m = smartroom();
  Object(m, "Hvac").fragments[0].transitions[0].to = "nowhere";
  EXPECT_TRUE(HasCode(m, "E005"));

  m = smartroom();
  Object(m, "Hvac").fragments[0].transitions[0].activity.effects[0].event = "boil";
  EXPECT_TRUE(HasCode(m, "E005"));

  m = smartroom();
  Object(m, "Hvac").fragments[0].transitions[0].activity.precondition =
      Condition::MakeAtom("HvacStatus", "Melting");
  EXPECT_TRUE(HasCode(m, "E005"));
}

TEST(ValidatorTest, ActivityAnnotations) {
  auto m = smartroom();
  auto& ensure = Object(m, "Controller").core_processes[0].transitions[0].activity;
  ensure.goal.reset();
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E006"});
  ensure.goal = Condition::Or({Condition::MakeAtom("RoomTemp", "Comfort"),
                               Condition::MakeAtom("RoomTemp", "Hot")});
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E006"});

  m = smartroom();
  Object(m, "Hvac").fragments[0].transitions[0].activity.goal = Condition::MakeAtom("RoomTemp", "Hot");
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E006"});
}

TEST(ValidatorTest, InitialNodes) {
  auto m = smartroom();
  for (auto& n : Object(m, "Hvac").fragments[0].nodes) n.initial = false;
  EXPECT_EQ(Codes(m), std::vector<std::string>{"E007"});

  m = smartroom();
  for (auto& n : Object(m, "Hvac").fragments[0].nodes) n.initial = true;
  auto d = validate_model(m);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "W001");
  EXPECT_EQ(d[0].severity, Severity::kWarning);
  EXPECT_FALSE(has_errors(d));
}

TEST(ValidatorTest, DuplicateNames) {
  auto m = smartroom();
  m.domain_objects.push_back(m.domain_objects.back());
  EXPECT_TRUE(HasCode(m, "E008"));
}

TEST(ValidatorTest, FormatsDiagnostics) {
  Diagnostic d{"E003", Severity::kError, "Hvac/property:HvacStatus", "property has no initial state"};
  EXPECT_EQ(format_diagnostic(d), "E003 error Hvac/property:HvacStatus property has no initial state");
}

TEST(ModelTest, InitialConfigurationInDeclarationOrder) {
  auto c = initial_configuration(smartroom());
  EXPECT_EQ(c.to_string(), "HvacStatus=Operational WindowState=Closed RoomTemp=Hot");
}

TEST(ModelTest, ApplyEvent) {
  auto m = smartroom();
  auto c = initial_configuration(m);
  auto next = apply_event(m, c, "HvacStatus", "fail");
  ASSERT_TRUE(next);
  EXPECT_EQ(next->at("HvacStatus"), "Broken");
  EXPECT_EQ(c.at("HvacStatus"), "Operational");
  EXPECT_FALSE(apply_event(m, c, "HvacStatus", "repair"));
  EXPECT_THROW(apply_event(m, c, "Humidity", "rise"), ModelError);
  EXPECT_THROW(apply_event(m, c, "HvacStatus", "explode"), ModelError);
}

TEST(ModelTest, ConditionExamples) {
  auto c = initial_configuration(smartroom());
  EXPECT_TRUE(eval_condition(parse_condition("RoomTemp = Hot"), c));
  EXPECT_FALSE(eval_condition(parse_condition("!(HvacStatus = Broken) && RoomTemp = Comfort"), c));
}

TEST(ModelTest, InverseEvents) {
  auto m = smartroom();
  auto c = initial_configuration(m);
  auto cooled = apply_event(m, c, "RoomTemp", "cool");
  ASSERT_TRUE(cooled);
  EXPECT_EQ(cooled->at("RoomTemp"), "Comfort");
  EXPECT_EQ(apply_event(m, *cooled, "RoomTemp", "heat"), c);
}

TEST(ModelTest, Counts) {
  auto m = smartroom();
  EXPECT_EQ(m.domain_objects.size(), 4u);
  EXPECT_EQ(m.property_count(), 3u);
  EXPECT_EQ(m.fragment_count(), 3u);
  EXPECT_EQ(m.property_owner("WindowState")->name, "Window");
  EXPECT_EQ(m.strategy_for(*m.find_object("Controller")).mechanisms,
            AdaptationStrategy::Default().mechanisms);
}

}  // namespace
}  // namespace domobj
