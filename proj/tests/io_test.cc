/*
 * Copyright 2026 The advlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "advlab/io.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "advlab/errors.h"
#include "advlab/protocols.h"
#include "advlab/sim.h"

namespace advlab {
namespace {

ProcessSet S(int n, std::initializer_list<ProcessId> m) { return ProcessSet::Of(n, m); }

TEST(IoTest, CanonicalAdversaryFile) {
  const Adversary a(3, {S(3, {1, 2, 3}), S(3, {2, 3}), S(3, {1})});
  EXPECT_EQ(AdversaryToJson(a).dump(), R"({"n":3,"live_sets":[[1],[2,3],[1,2,3]]})");
}

TEST(IoTest, AdversaryAcceptsAnyOuterOrder) {
  const Adversary a = AdversaryFromJson(
      ParseJson(R"({"n":3,"live_sets":[[1,2,3],[1],[2,3]]})"));
  EXPECT_EQ(a, Adversary(3, {S(3, {1}), S(3, {2, 3}), S(3, {1, 2, 3})}));
  EXPECT_EQ(AdversaryFromJson(ParseJson(R"({"n":3,"live_sets":[]})")),
            Adversary::Empty(3));
}

TEST(IoTest, AdversaryRejectsMalformed) {
  for (const char* text : {
           R"({"live_sets":[[1]]})",
           R"({"n":3})",
           R"({"n":3,"live_sets":[[]]})",
           R"({"n":3,"live_sets":[[2,1]]})",
           R"({"n":3,"live_sets":[[1,1]]})",
           R"({"n":3,"live_sets":[[4]]})",
           R"({"n":3,"live_sets":[[0]]})",
           R"({"n":3,"live_sets":[[1],[1]]})",
           R"({"n":17,"live_sets":[]})",
           R"({"n":3,"live_sets":[["1"]]})",
           R"([1,2])",
       }) {
    EXPECT_THROW(AdversaryFromJson(ParseJson(text)), InputError) << text;
  }
  EXPECT_THROW(ParseJson("{not json"), InputError);
}

TEST(IoTest, AlphaRoundTrip) {
  const AgreementFunction alpha = AgreementFunctionOf(
      Adversary(3, {S(3, {1}), S(3, {2, 3}), S(3, {1, 2, 3})}));
  const Json j = AlphaToJson(alpha);
  EXPECT_EQ(j.dump(), R"({"n":3,"table":[0,1,0,1,0,1,1,2]})");
  EXPECT_EQ(AlphaFromJson(j), alpha);
  EXPECT_THROW(AlphaFromJson(ParseJson(R"({"n":2,"table":[0,1,1]})")), InputError);
  EXPECT_THROW(AlphaFromJson(ParseJson(R"({"n":2,"table":[1,1,1,2]})")), InputError);
}

TEST(IoTest, ScheduleRoundTrip) {
  const Schedule s = Schedule::Make(3, {1, 2, 2, 3, 1, 3}, S(3, {1, 3}));
  const Json j = ScheduleToJson(s);
  EXPECT_EQ(j.dump(),
            R"({"n":3,"steps":[1,2,2,3,1,3],"halted_at":{"2":3},"correct_set":[1,3]})");
  EXPECT_EQ(ScheduleFromJson(j), s);
}

TEST(IoTest, ScheduleRejectsInconsistentHalt) {
  // p2 takes a step after its halt index.
  EXPECT_THROW(ScheduleFromJson(ParseJson(
                   R"({"n":2,"steps":[1,2,2],"halted_at":{"2":1},"correct_set":[1]})")),
               InputError);
  // A correct process with a halt entry.
  EXPECT_THROW(ScheduleFromJson(ParseJson(
                   R"({"n":2,"steps":[1,2],"halted_at":{"1":1},"correct_set":[1]})")),
               InputError);
}

TEST(IoTest, TraceRoundTrip) {
  const SafeAgreementProtocol sa({5, 9, 2});
  const Schedule s = CompleteSchedule(
      Schedule::Make(3, {3, 1, 2, 1, 3, 2, 1, 1}, S(3, {1, 2})), 6);
  const RunTrace t = Execute(sa, s);
  const Json j = TraceToJson(t);
  EXPECT_EQ(TraceFromJson(j), t);
  EXPECT_EQ(TraceFromJson(ParseJson(j.dump())), t);
}

TEST(IoTest, TraceRejectsDoubleDecision) {
  const RunTrace t = Execute(EchoProtocol({1}), Schedule::Make(1, {1, 1}, S(1, {1})));
  Json j = TraceToJson(t);
  j["decisions"].push_back(j["decisions"][0]);
  EXPECT_THROW(TraceFromJson(j), InputError);
}

TEST(IoTest, CellText) {
  const Cell c{{"sa", Entry{4, 1}}, {"R", Entry{-3, 0}}};
  EXPECT_EQ(CellToText(c), "R=-3:0;sa=4:1");
  EXPECT_EQ(CellFromText(CellToText(c)), c);
  EXPECT_EQ(CellFromText(""), Cell{});
  EXPECT_THROW(CellFromText("x=1"), InputError);
  EXPECT_THROW(CellFromText("x=a:1"), InputError);
}

TEST(IoTest, VerdictShape) {
  Verdict v{"validity", false, Witness{3, 2, 11, "not an input"}};
  EXPECT_EQ(VerdictToJson(v).dump(),
            R"({"property":"validity","pass":false,"witness":{"step":3,"process":2,"value":11,"detail":"not an input"}})");
  EXPECT_EQ(VerdictToJson(Verdict{"termination", true, {}}).dump(),
            R"({"property":"termination","pass":true,"witness":null})");
}

TEST(IoTest, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "advlab_io_test";
  std::filesystem::remove_all(dir);
  const Adversary a(2, {S(2, {1}), S(2, {1, 2})});
  WriteJsonFile(dir / "sub" / "a.json", AdversaryToJson(a));
  EXPECT_EQ(AdversaryFromJson(ReadJsonFile(dir / "sub" / "a.json")), a);
  EXPECT_THROW(ReadJsonFile(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace advlab
