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

#include "advlab/campaign.h"

#include <gtest/gtest.h>

#include "advlab/adversary.h"
#include "advlab/errors.h"
#include "advlab/protocols.h"
#include "advlab/sim.h"

namespace advlab {
namespace {

ProcessSet S(int n, std::initializer_list<ProcessId> m) { return ProcessSet::Of(n, m); }

Adversary A1() { return Adversary(3, {S(3, {1}), S(3, {2, 3}), S(3, {1, 2, 3})}); }

TEST(CampaignTest, ProtocolNames) {
  for (ProtocolKind k : {ProtocolKind::kEcho, ProtocolKind::kSafeAgreement,
                         ProtocolKind::kAlphaSetcons, ProtocolKind::kAdaptive,
                         ProtocolKind::kCons23}) {
    EXPECT_EQ(ParseProtocolKind(ProtocolKindName(k)), k);
  }
  EXPECT_FALSE(ParseProtocolKind("paxos").has_value());
}

TEST(CampaignTest, AdaptiveSeededClean) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kAdaptive;
  c.n = 3;
  c.alpha = AgreementFunctionOf(A1());
  c.seeds = 300;
  for (Subroutine s : {Subroutine::kOracle, Subroutine::kSafeAgreement}) {
    c.subroutine = s;
    const CampaignReport r = RunCampaign(c);
    EXPECT_EQ(r.runs, 300u);
    EXPECT_TRUE(r.ok()) << SubroutineName(s);
    EXPECT_EQ(r.checked.at("validity"), 300u);
    EXPECT_GT(r.checked.at("termination"), 0u);
  }
}

TEST(CampaignTest, SafeAgreementExhaustiveSmall) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kSafeAgreement;
  c.n = 2;
  c.exhaustive = true;
  c.steps_per_process = 3;
  c.halts = 1;
  const CampaignReport r = RunCampaign(c);
  EXPECT_EQ(r.runs + r.skipped, CountSchedules(2, 3, 1));
  EXPECT_TRUE(r.ok());
  EXPECT_LT(r.checked.at("termination"), r.runs);
}

TEST(CampaignTest, ExhaustiveFiltersByAdversary) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kCons23;
  c.n = 3;
  c.adversary = A1();
  c.exhaustive = true;
  c.steps_per_process = 2;
  c.halts = 2;
  const CampaignReport r = RunCampaign(c);
  EXPECT_GT(r.skipped, 0u);
  EXPECT_GT(r.runs, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(CampaignTest, EchoOnlyChecksValidityAndTermination) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kEcho;
  c.n = 3;
  c.seeds = 20;
  const CampaignReport r = RunCampaign(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked.at("termination"), 20u);
  EXPECT_EQ(r.checked.count("k-agreement"), 0u);
}

TEST(CampaignTest, CheckRunFlagsDisagreement) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kSafeAgreement;
  c.n = 2;
  // Two distinct decisions, as a broken safe agreement would produce.
  const RunTrace t = Execute(EchoProtocol({1, 2}),
                             Schedule::Make(2, {1, 1, 2, 2}, ProcessSet::Full(2)));
  int failed = 0;
  for (const Verdict& v : CheckRun(c, t)) {
    if (!v.pass) {
      ++failed;
      EXPECT_EQ(v.property, "k-agreement");
      EXPECT_EQ(v.witness->process, 2);
    }
  }
  EXPECT_EQ(failed, 1);
}

TEST(CampaignTest, ConfigErrors) {
  CampaignConfig c;
  c.protocol = ProtocolKind::kAdaptive;
  c.n = 3;
  c.inputs = {1, 2};
  EXPECT_THROW(MakeProtocol(c), InputError);
  c.inputs.clear();
  c.alpha = MakeWaitFree(2);
  EXPECT_THROW(RunCampaign(c), InputError);
  CampaignConfig cons;
  cons.protocol = ProtocolKind::kCons23;
  cons.n = 2;
  EXPECT_THROW(MakeProtocol(cons), InputError);
}

TEST(CampaignTest, ScheduleModelDefaults) {
  CampaignConfig c;
  c.n = 3;
  EXPECT_EQ(ScheduleModel(c), MakeWaitFree(3));
  c.adversary = A1();
  EXPECT_EQ(ScheduleModel(c), AgreementFunctionOf(A1()));
}

}  // namespace
}  // namespace advlab
