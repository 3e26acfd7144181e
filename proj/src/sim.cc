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

#include "advlab/sim.h"

#include <algorithm>
#include <random>

namespace advlab {

void StepContext::Decide(Value v) {
  if (decision_) {
    throw ProtocolFault("process attempted a second decision (" +
                        std::to_string(*decision_) + " then " +
                        std::to_string(v) + ")");
  }
  decision_ = v;
}

RunTrace Execute(const Protocol& protocol, const Schedule& schedule,
                 const ExecuteOptions& options) {
  if (protocol.arity() != schedule.n) {
    throw InputError("protocol '" + protocol.name() + "' has arity " +
                     std::to_string(protocol.arity()) + " but the schedule has n=" +
                     std::to_string(schedule.n));
  }
  schedule.Validate();
  const int n = schedule.n;
  std::vector<std::unique_ptr<ProcessLogic>> processes = protocol.Instantiate();
  SnapshotMemory memory(n);
  std::vector<int> activations(n, 0);
  std::vector<StepContext> contexts(n);

  RunTrace trace;
  trace.protocol = protocol.name();
  trace.schedule = schedule;
  trace.inputs = protocol.inputs();
  trace.participating = schedule.participating();
  if (options.record_events) trace.events.reserve(schedule.steps.size());

  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const ProcessId p = schedule.steps[i];
    StepContext& ctx = contexts[p - 1];
    const bool update = ++activations[p - 1] % 2 == 1;
    if (update) {
      // A decided process rewrites its cell unchanged.
      if (!ctx.decided()) memory.Update(p, processes[p - 1]->OnUpdate());
      if (options.record_events) {
        trace.events.push_back(
            {i, p, EventKind::kUpdate, memory.cell(p).value_or(Cell{}), {}});
      }
    } else {
      const auto view = memory.Snapshot();
      if (!ctx.decided()) {
        processes[p - 1]->OnSnapshot(view, ctx);
        if (ctx.decided()) trace.decisions.push_back({i, p, *ctx.decision()});
      }
      if (options.record_events) {
        trace.events.push_back({i, p, EventKind::kSnapshot, {},
                                std::vector<std::optional<Cell>>(view.begin(),
                                                                 view.end())});
      }
    }
  }

  trace.terminal.resize(n);
  trace.blocked = ProcessSet::Empty(n);
  for (ProcessId p = 1; p <= n; ++p) {
    trace.terminal[p - 1] = !trace.participating.contains(p) ? Terminal::kAbsent
                            : schedule.correct_set.contains(p) ? Terminal::kRunning
                                                               : Terminal::kHalted;
    const StepContext& ctx = contexts[p - 1];
    if (ctx.blocked() && !ctx.decided()) trace.blocked = trace.blocked.with(p);
  }
  return trace;
}

namespace {

void CheckBudget(int n, std::size_t budget) {
  if (budget < static_cast<std::size_t>(2 * n)) {
    throw InputError("budget " + std::to_string(budget) + " is below 2n=" +
                     std::to_string(2 * n));
  }
}

std::size_t Uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Schedule BuildSchedule(const ProcessSet& correct, const ProcessSet& participating,
                       std::mt19937_64& rng, std::size_t budget) {
  const int n = correct.n();
  const ProcessSet faulty = participating - correct;
  std::vector<ProcessId> steps;
  steps.reserve(budget);
  const std::size_t faulty_cap =
      std::max<std::size_t>(1, budget / (2 * participating.size()));
  for (ProcessId f : faulty.members()) {
    steps.insert(steps.end(), Uniform(rng, 1, faulty_cap), f);
  }
  const std::vector<ProcessId> live = correct.members();
  const std::size_t base = budget / (2 * live.size());
  for (ProcessId c : live) steps.insert(steps.end(), base, c);
  while (steps.size() < budget) {
    steps.push_back(live[Uniform(rng, 0, live.size() - 1)]);
  }
  std::shuffle(steps.begin(), steps.end(), rng);
  return Schedule::Make(n, std::move(steps), correct);
}

}  // namespace

Schedule GenerateSchedule(const Adversary& adversary, std::uint64_t seed,
                          std::size_t budget) {
  if (adversary.empty()) {
    throw InputError("cannot generate a schedule for the empty adversary");
  }
  const int n = adversary.n();
  CheckBudget(n, budget);
  std::mt19937_64 rng(seed);
  const ProcessSet correct(n, adversary.bits()[Uniform(rng, 0, adversary.size() - 1)]);
  ProcessSet participating = correct;
  for (ProcessId p : (ProcessSet::Full(n) - correct).members()) {
    if (Uniform(rng, 0, 1) == 1) participating = participating.with(p);
  }
  return BuildSchedule(correct, participating, rng, budget);
}

Schedule GenerateAdmissibleSchedule(const AgreementFunction& alpha,
                                    std::uint64_t seed, std::size_t budget) {
  const int n = alpha.n();
  CheckBudget(n, budget);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t p = 1; p < alpha.table().size(); ++p) {
    if (alpha.at(p) >= 1) candidates.push_back(p);
  }
  if (candidates.empty()) {
    throw InputError("agreement function admits no participating set");
  }
  std::mt19937_64 rng(seed);
  const ProcessSet participating(n, candidates[Uniform(rng, 0, candidates.size() - 1)]);
  const std::size_t faults =
      Uniform(rng, 0, static_cast<std::size_t>(alpha(participating) - 1));
  std::vector<ProcessId> members = participating.members();
  std::shuffle(members.begin(), members.end(), rng);
  ProcessSet correct = participating;
  for (std::size_t i = 0; i < faults; ++i) correct = correct.without(members[i]);
  return BuildSchedule(correct, participating, rng, budget);
}

Schedule CompleteSchedule(const Schedule& schedule, int rounds) {
  Schedule out = schedule;
  const std::vector<ProcessId> live = schedule.correct_set.members();
  for (int r = 0; r < rounds; ++r) {
    out.steps.insert(out.steps.end(), live.begin(), live.end());
  }
  return out;
}

namespace {

void Interleave(std::vector<int>& remaining, std::vector<ProcessId>& prefix,
                std::size_t total, const std::function<void()>& emit) {
  if (prefix.size() == total) {
    emit();
    return;
  }
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0) continue;
    --remaining[i];
    prefix.push_back(static_cast<ProcessId>(i + 1));
    Interleave(remaining, prefix, total, emit);
    prefix.pop_back();
    ++remaining[i];
  }
}

void CheckEnumerationBound(int n, int steps_per_process, int halts_allowed) {
  CheckUniverseSize(n);
  if (steps_per_process < 1) throw InputError("steps per process must be >= 1");
  if (halts_allowed < 0) throw InputError("halts allowed must be >= 0");
  if (n * steps_per_process > kMaxEnumeratedSteps) {
    throw InputError("enumeration of " + std::to_string(n * steps_per_process) +
                     " total steps exceeds the bound of " +
                     std::to_string(kMaxEnumeratedSteps));
  }
}

}  // namespace

void EnumerateSchedules(int n, int steps_per_process, int halts_allowed,
                        const std::function<void(const Schedule&)>& visit) {
  CheckEnumerationBound(n, steps_per_process, halts_allowed);
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t halted = 0; halted <= full; ++halted) {
    if (std::popcount(halted) > halts_allowed) continue;
    const std::vector<ProcessId> halters = ProcessSet(n, halted).members();
    // Odometer over halt points 1..steps_per_process for each halted process.
    std::vector<int> points(halters.size(), 1);
    while (true) {
      std::vector<int> remaining(n, steps_per_process);
      for (std::size_t h = 0; h < halters.size(); ++h) {
        remaining[halters[h] - 1] = points[h];
      }
      std::size_t total = 0;
      for (int r : remaining) total += r;
      const ProcessSet correct(n, full & ~halted);
      std::vector<ProcessId> prefix;
      prefix.reserve(total);
      Interleave(remaining, prefix, total, [&] {
        visit(Schedule::Make(n, prefix, correct));
      });
      std::size_t h = 0;
      while (h < points.size() && points[h] == steps_per_process) points[h++] = 1;
      if (h == points.size()) break;
      ++points[h];
    }
  }
}

std::uint64_t CountSchedules(int n, int steps_per_process, int halts_allowed) {
  std::uint64_t count = 0;
  EnumerateSchedules(n, steps_per_process, halts_allowed,
                     [&count](const Schedule&) { ++count; });
  return count;
}

bool CheckAlphaCompliance(const RunTrace& trace, const AgreementFunction& alpha) {
  return AdmitsTrace(alpha, trace);
}

}  // namespace advlab
