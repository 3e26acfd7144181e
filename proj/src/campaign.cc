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

#include <numeric>

#include "advlab/errors.h"

namespace advlab {
namespace {

struct NamedProtocol {
  ProtocolKind kind;
  const char* name;
};

constexpr NamedProtocol kProtocols[] = {
    {ProtocolKind::kEcho, "echo"},
    {ProtocolKind::kSafeAgreement, "safe-agreement"},
    {ProtocolKind::kAlphaSetcons, "alpha-setcons"},
    {ProtocolKind::kAdaptive, "adaptive"},
    {ProtocolKind::kCons23, "cons23"},
};

std::vector<Value> InputsOf(const CampaignConfig& config) {
  if (config.inputs.empty()) {
    std::vector<Value> ids(config.n);
    std::iota(ids.begin(), ids.end(), Value{1});
    return ids;
  }
  if (static_cast<int>(config.inputs.size()) != config.n) {
    throw InputError("expected " + std::to_string(config.n) + " inputs, got " +
                     std::to_string(config.inputs.size()));
  }
  return config.inputs;
}

// Agreement function the protocol itself is built for.
AgreementFunction ProtocolAlpha(const CampaignConfig& config) {
  if (config.alpha) return *config.alpha;
  if (config.adversary) return AgreementFunctionOf(*config.adversary);
  return MakeWaitFree(config.n);
}

// A halted participant stopped between its proposal write and its level
// write.
bool HaltedInUnsafeWindow(const Schedule& schedule) {
  for (ProcessId p : schedule.halted().members()) {
    const int k = schedule.step_count(p);
    if (k == 1 || k == 2) return true;
  }
  return false;
}

bool InModel(const CampaignConfig& config, const Schedule& schedule) {
  if (config.alpha) return AdmitsSchedule(*config.alpha, schedule);
  if (config.adversary) return config.adversary->contains(schedule.correct_set);
  return true;
}

void Validate(const CampaignConfig& config) {
  CheckUniverseSize(config.n);
  if (config.adversary && config.adversary->n() != config.n) {
    throw InputError("adversary universe differs from n");
  }
  if (config.alpha && config.alpha->n() != config.n) {
    throw InputError("alpha universe differs from n");
  }
  if (config.seeds < 0) throw InputError("seed count must be non-negative");
  if (config.completion_rounds < 0) {
    throw InputError("completion rounds must be non-negative");
  }
}

}  // namespace

std::optional<ProtocolKind> ParseProtocolKind(std::string_view name) {
  for (const NamedProtocol& e : kProtocols) {
    if (name == e.name) return e.kind;
  }
  return std::nullopt;
}

const char* ProtocolKindName(ProtocolKind kind) {
  for (const NamedProtocol& e : kProtocols) {
    if (kind == e.kind) return e.name;
  }
  return "?";
}

std::uint64_t CampaignReport::total_failures() const {
  std::uint64_t total = 0;
  for (const auto& [property, count] : failed) total += count;
  return total;
}

std::unique_ptr<Protocol> MakeProtocol(const CampaignConfig& config) {
  Validate(config);
  std::vector<Value> inputs = InputsOf(config);
  switch (config.protocol) {
    case ProtocolKind::kEcho:
      return std::make_unique<EchoProtocol>(std::move(inputs));
    case ProtocolKind::kSafeAgreement:
      return std::make_unique<SafeAgreementProtocol>(std::move(inputs));
    case ProtocolKind::kAlphaSetcons:
      return std::make_unique<AlphaSetConsensusProtocol>(ProtocolAlpha(config),
                                                         std::move(inputs));
    case ProtocolKind::kAdaptive:
      return std::make_unique<AdaptiveSetConsensusProtocol>(
          ProtocolAlpha(config), std::move(inputs), config.subroutine);
    case ProtocolKind::kCons23:
      if (config.n != 3) throw InputError("cons23 needs n = 3");
      return std::make_unique<Cons23Protocol>(std::move(inputs));
  }
  throw InputError("unknown protocol");
}

AgreementFunction ScheduleModel(const CampaignConfig& config) {
  return ProtocolAlpha(config);
}

std::vector<Verdict> CheckRun(const CampaignConfig& config,
                              const RunTrace& trace) {
  std::vector<Verdict> out;
  out.push_back(CheckValidity(trace, trace.inputs));
  const Schedule& s = trace.schedule;
  switch (config.protocol) {
    case ProtocolKind::kEcho:
      out.push_back(CheckTermination(trace));
      break;
    case ProtocolKind::kSafeAgreement:
      out.push_back(CheckKAgreement(trace, 1));
      if (!HaltedInUnsafeWindow(s)) out.push_back(CheckTermination(trace));
      break;
    case ProtocolKind::kAlphaSetcons: {
      const AgreementFunction alpha = ProtocolAlpha(config);
      out.push_back(CheckKAgreement(trace, alpha(ProcessSet::Full(config.n))));
      if (AdmitsSchedule(alpha, s)) out.push_back(CheckTermination(trace));
      break;
    }
    case ProtocolKind::kAdaptive: {
      const AgreementFunction alpha = ProtocolAlpha(config);
      out.push_back(CheckAlphaAgreement(trace, alpha));
      out.push_back(CheckLevelLock(trace, kAdaptiveRegister));
      if (AdmitsSchedule(alpha, s)) out.push_back(CheckTermination(trace));
      break;
    }
    case ProtocolKind::kCons23:
      out.push_back(CheckKAgreement(trace, 1));
      if (s.correct_set.contains(2) || !s.correct_set.contains(3)) {
        out.push_back(CheckTermination(trace, ProcessSet::Of(3, {2, 3})));
      }
      break;
  }
  return out;
}

CampaignReport RunCampaign(const CampaignConfig& config) {
  const std::unique_ptr<Protocol> protocol = MakeProtocol(config);
  const std::size_t budget =
      config.budget != 0 ? config.budget : static_cast<std::size_t>(100 * config.n);
  CampaignReport report;

  auto run_one = [&](const Schedule& base, const std::string& origin) {
    const Schedule schedule = CompleteSchedule(base, config.completion_rounds);
    const RunTrace trace = Execute(*protocol, schedule);
    ++report.runs;
    for (Verdict& v : CheckRun(config, trace)) {
      ++report.checked[v.property];
      if (v.pass) continue;
      ++report.failed[v.property];
      if (report.failures.size() < config.keep_failures) {
        report.failures.push_back(RunFailure{origin, std::move(v), trace});
      }
    }
  };

  if (config.exhaustive) {
    std::uint64_t index = 0;
    EnumerateSchedules(config.n, config.steps_per_process, config.halts,
                       [&](const Schedule& s) {
                         const std::uint64_t i = index++;
                         if (!InModel(config, s)) {
                           ++report.skipped;
                           return;
                         }
                         run_one(s, "schedule " + std::to_string(i));
                       });
    return report;
  }

  const bool by_adversary = !config.alpha && config.adversary;
  const AgreementFunction model = ScheduleModel(config);
  for (int i = 0; i < config.seeds; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    const Schedule s = by_adversary
                           ? GenerateSchedule(*config.adversary, seed, budget)
                           : GenerateAdmissibleSchedule(model, seed, budget);
    run_one(s, "seed " + std::to_string(seed));
  }
  return report;
}

}  // namespace advlab
