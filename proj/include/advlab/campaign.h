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

#ifndef ADVLAB_CAMPAIGN_H_
#define ADVLAB_CAMPAIGN_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"
#include "advlab/checkers.h"
#include "advlab/protocols.h"
#include "advlab/sim.h"

namespace advlab {

enum class ProtocolKind { kEcho, kSafeAgreement, kAlphaSetcons, kAdaptive, kCons23 };

std::optional<ProtocolKind> ParseProtocolKind(std::string_view name);
const char* ProtocolKindName(ProtocolKind kind);

struct CampaignConfig {
  ProtocolKind protocol = ProtocolKind::kAdaptive;
  int n = 0;
  // Schedule source. With alpha, seeded schedules are admissible for it and
  // enumerated ones are filtered by it; otherwise the adversary plays that
  // role; with neither, the wait-free agreement function is used.
  std::optional<Adversary> adversary;
  std::optional<AgreementFunction> alpha;
  std::vector<Value> inputs;  // empty: p_i proposes i
  Subroutine subroutine = Subroutine::kSafeAgreement;

  std::uint64_t seed = 1;
  int seeds = 1;
  std::size_t budget = 0;  // 0: 100 n

  bool exhaustive = false;
  int steps_per_process = 2;
  int halts = 0;

  // Round-robin passes over the correct processes appended to every schedule
  // before checking, so waits that depend on slower processes can finish.
  int completion_rounds = 32;

  std::size_t keep_failures = 4;
};

struct RunFailure {
  std::string origin;  // "seed 17", "schedule 311"
  Verdict verdict;
  RunTrace trace;
};

struct CampaignReport {
  std::uint64_t runs = 0;
  std::uint64_t skipped = 0;  // enumerated schedules outside the model
  std::map<std::string, std::uint64_t> checked;
  std::map<std::string, std::uint64_t> failed;
  std::vector<RunFailure> failures;  // first keep_failures, in run order

  std::uint64_t total_failures() const;
  bool ok() const { return total_failures() == 0; }
};

// Throws InputError on inconsistent configuration (universe mismatch, inputs
// of the wrong length, alpha-setcons with alpha(Pi) = 0, ...).
std::unique_ptr<Protocol> MakeProtocol(const CampaignConfig& config);

// The agreement function schedules are generated or filtered against.
AgreementFunction ScheduleModel(const CampaignConfig& config);

// Properties asserted for one run of the configured protocol.
std::vector<Verdict> CheckRun(const CampaignConfig& config,
                              const RunTrace& trace);

CampaignReport RunCampaign(const CampaignConfig& config);

}  // namespace advlab

#endif  // ADVLAB_CAMPAIGN_H_
