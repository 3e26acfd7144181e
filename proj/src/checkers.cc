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

#include "advlab/checkers.h"

#include <algorithm>
#include <map>
#include <set>

#include "advlab/errors.h"

namespace advlab {
namespace {

Verdict Pass(std::string property) { return Verdict{std::move(property), true, {}}; }

Verdict Fail(std::string property, Witness witness) {
  return Verdict{std::move(property), false, std::move(witness)};
}

}  // namespace

Verdict CheckValidity(const RunTrace& trace, const std::vector<Value>& inputs) {
  std::set<Value> proposed;
  for (ProcessId p : trace.participating.members()) {
    if (static_cast<std::size_t>(p) <= inputs.size()) proposed.insert(inputs[p - 1]);
  }
  for (const Decision& d : trace.decisions) {
    if (!proposed.contains(d.value)) {
      return Fail("validity", {d.step, d.process, d.value,
                               "decided value is no participant's input"});
    }
  }
  return Pass("validity");
}

Verdict CheckAlphaAgreement(const RunTrace& trace, const AgreementFunction& alpha) {
  std::set<Value> decided;
  for (const Decision& d : trace.decisions) {
    decided.insert(d.value);
    const ProcessSet now = trace.ParticipatingAt(d.step);
    const int bound = alpha(now);
    if (static_cast<int>(decided.size()) > bound) {
      return Fail("alpha-agreement",
                  {d.step, d.process, d.value,
                   std::to_string(decided.size()) + " distinct values decided with "
                   "participation " + now.to_string() + " where alpha = " +
                   std::to_string(bound)});
    }
  }
  return Pass("alpha-agreement");
}

Verdict CheckTermination(const RunTrace& trace) {
  return CheckTermination(trace, ProcessSet::Full(trace.n()));
}

Verdict CheckTermination(const RunTrace& trace, const ProcessSet& scope) {
  const std::size_t last = trace.schedule.steps.empty() ? 0 : trace.schedule.steps.size() - 1;
  for (ProcessId p : (trace.participating & scope).members()) {
    if (trace.terminal[p - 1] == Terminal::kRunning && !trace.DecisionOf(p)) {
      return Fail("termination",
                  {last, p, std::nullopt,
                   std::string("correct process has not decided") +
                       (trace.blocked.contains(p) ? " (blocked)" : "")});
    }
  }
  return Pass("termination");
}

Verdict CheckKAgreement(const RunTrace& trace, int k) {
  std::set<Value> decided;
  for (const Decision& d : trace.decisions) {
    decided.insert(d.value);
    if (static_cast<int>(decided.size()) > k) {
      return Fail("k-agreement", {d.step, d.process, d.value,
                                  std::to_string(decided.size()) +
                                      " distinct values exceed k = " +
                                      std::to_string(k)});
    }
  }
  Verdict validity = CheckValidity(trace, trace.inputs);
  if (!validity.pass) return Fail("k-agreement", *validity.witness);
  return Pass("k-agreement");
}

Verdict CheckLevelLock(const RunTrace& trace, const std::string& reg) {
  if (trace.events.empty() && !trace.decisions.empty()) {
    throw InputError("level-lock check needs a trace with recorded events");
  }
  std::vector<std::optional<std::int64_t>> last_level(trace.n());
  std::map<std::int64_t, std::set<Value>> written;  // level -> values
  std::vector<std::int64_t> returned(trace.n(), -1);
  std::size_t next_decision = 0;
  auto settle = [&](std::size_t up_to) {
    while (next_decision < trace.decisions.size() &&
           trace.decisions[next_decision].step <= up_to) {
      const Decision& d = trace.decisions[next_decision++];
      if (last_level[d.process - 1]) returned[d.process - 1] = *last_level[d.process - 1];
    }
  };
  for (const Event& e : trace.events) {
    settle(e.step == 0 ? 0 : e.step - 1);
    if (e.kind != EventKind::kUpdate) continue;
    auto it = e.written.find(reg);
    if (it == e.written.end()) continue;
    last_level[e.process - 1] = it->second.level;
    written[it->second.level].insert(it->second.value);
  }
  settle(static_cast<std::size_t>(-1));
  std::optional<std::int64_t> lowest;
  for (const Decision& d : trace.decisions) {
    const std::int64_t l = returned[d.process - 1];
    if (l < 0) {
      return Fail("level-lock", {d.step, d.process, d.value,
                                 "decision without a prior write to " + reg});
    }
    if (!lowest || l < *lowest) lowest = l;
  }
  if (!lowest) return Pass("level-lock");
  const std::set<Value>& locked = written[*lowest];
  for (const Decision& d : trace.decisions) {
    if (!locked.contains(d.value)) {
      return Fail("level-lock",
                  {d.step, d.process, d.value,
                   "decided value was never written at the lowest returning "
                   "level " + std::to_string(*lowest)});
    }
  }
  return Pass("level-lock");
}

}  // namespace advlab
