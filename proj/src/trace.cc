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

#include "advlab/trace.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace advlab {
namespace {

Value ParseInt(std::string_view text, std::string_view what) {
  Value v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InputError("malformed " + std::string(what) + " '" +
                     std::string(text) + "' in cell text");
  }
  return v;
}

}  // namespace

std::string CellToText(const Cell& cell) {
  std::string out;
  for (const auto& [name, entry] : cell) {
    if (!out.empty()) out += ';';
    out += name;
    out += '=';
    out += std::to_string(entry.value);
    out += ':';
    out += std::to_string(entry.level);
  }
  return out;
}

Cell CellFromText(std::string_view text) {
  Cell cell;
  while (!text.empty()) {
    const std::size_t semi = text.find(';');
    const std::string_view item = text.substr(0, semi);
    const std::size_t eq = item.find('=');
    const std::size_t colon = item.rfind(':');
    if (eq == std::string_view::npos || colon == std::string_view::npos ||
        colon < eq || eq == 0) {
      throw InputError("malformed cell entry '" + std::string(item) + "'");
    }
    const std::string name(item.substr(0, eq));
    Entry e{ParseInt(item.substr(eq + 1, colon - eq - 1), "value"),
            ParseInt(item.substr(colon + 1), "level")};
    if (!cell.emplace(name, e).second) {
      throw InputError("duplicate register '" + name + "' in cell text");
    }
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return cell;
}

Schedule Schedule::Make(int n, std::vector<ProcessId> steps,
                        ProcessSet correct_set) {
  Schedule s;
  s.n = n;
  s.steps = std::move(steps);
  s.correct_set = correct_set;
  s.halted_at.assign(n, std::nullopt);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const ProcessId p = s.steps[i];
    if (p >= 1 && p <= n && !correct_set.contains(p)) s.halted_at[p - 1] = i + 1;
  }
  s.Validate();
  return s;
}

ProcessSet Schedule::participating() const {
  std::uint32_t bits = 0;
  for (ProcessId p : steps) bits |= 1u << (p - 1);
  return ProcessSet(n, bits);
}

ProcessSet Schedule::halted() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < halted_at.size(); ++i) {
    if (halted_at[i]) bits |= 1u << i;
  }
  return ProcessSet(n, bits);
}

int Schedule::step_count(ProcessId p) const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), p));
}

void Schedule::Validate() const {
  CheckUniverseSize(n);
  if (correct_set.n() != n) throw InputError("correct_set universe mismatch");
  if (halted_at.size() != static_cast<std::size_t>(n)) {
    throw InputError("halted_at must have one slot per process");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ProcessId p = steps[i];
    if (p < 1 || p > n) {
      throw InputError("schedule step " + std::to_string(i) + " names process " +
                       std::to_string(p) + " outside 1.." + std::to_string(n));
    }
    if (halted_at[p - 1] && i >= *halted_at[p - 1]) {
      throw InputError("process " + std::to_string(p) + " steps at index " +
                       std::to_string(i) + " after halting");
    }
  }
  const ProcessSet part = participating();
  for (ProcessId p = 1; p <= n; ++p) {
    if (correct_set.contains(p) && halted_at[p - 1]) {
      throw InputError("correct process " + std::to_string(p) + " has a halt point");
    }
    if (correct_set.contains(p) && !part.contains(p)) {
      throw InputError("correct process " + std::to_string(p) + " takes no steps");
    }
    if (part.contains(p) && !correct_set.contains(p) && !halted_at[p - 1]) {
      throw InputError("participant " + std::to_string(p) +
                       " is neither correct nor halted");
    }
    if (!part.contains(p) && halted_at[p - 1]) {
      throw InputError("halted process " + std::to_string(p) + " takes no steps");
    }
  }
}

const char* TerminalName(Terminal t) {
  switch (t) {
    case Terminal::kRunning: return "running";
    case Terminal::kHalted: return "halted";
    case Terminal::kAbsent: return "absent";
  }
  return "?";
}

ProcessSet RunTrace::ParticipatingAt(std::size_t step) const {
  std::uint32_t bits = 0;
  const std::size_t end = std::min(step + 1, schedule.steps.size());
  for (std::size_t i = 0; i < end; ++i) bits |= 1u << (schedule.steps[i] - 1);
  return ProcessSet(n(), bits);
}

std::optional<Value> RunTrace::DecisionOf(ProcessId p) const {
  for (const Decision& d : decisions) {
    if (d.process == p) return d.value;
  }
  return std::nullopt;
}

ProcessSet RunTrace::HaltedUndecided() const {
  ProcessSet out = ProcessSet::Empty(n());
  for (ProcessId p = 1; p <= n(); ++p) {
    if (terminal[p - 1] == Terminal::kHalted && !DecisionOf(p)) out = out.with(p);
  }
  return out;
}

RunTrace RunTrace::TruncatedAt(std::size_t step) const {
  RunTrace out;
  out.protocol = protocol;
  out.inputs = inputs;
  const std::size_t end = std::min(step + 1, schedule.steps.size());
  std::vector<ProcessId> steps(schedule.steps.begin(),
                               schedule.steps.begin() + end);
  out.schedule.n = schedule.n;
  out.schedule.steps = std::move(steps);
  out.participating = out.schedule.participating();
  out.schedule.correct_set = schedule.correct_set & out.participating;
  out.schedule.halted_at = schedule.halted_at;
  for (ProcessId p = 1; p <= n(); ++p) {
    if (!out.participating.contains(p)) out.schedule.halted_at[p - 1].reset();
  }
  for (const Event& e : events) {
    if (e.step <= step) out.events.push_back(e);
  }
  for (const Decision& d : decisions) {
    if (d.step <= step) out.decisions.push_back(d);
  }
  out.terminal.resize(n());
  for (ProcessId p = 1; p <= n(); ++p) {
    out.terminal[p - 1] = !out.participating.contains(p) ? Terminal::kAbsent
                          : out.schedule.correct_set.contains(p)
                              ? Terminal::kRunning
                              : Terminal::kHalted;
  }
  out.blocked = blocked & out.participating;
  return out;
}

void RunTrace::Validate() const {
  schedule.Validate();
  if (participating != schedule.participating()) {
    throw InputError("participating set does not match the schedule");
  }
  if (terminal.size() != static_cast<std::size_t>(n())) {
    throw InputError("terminal flags must have one slot per process");
  }
  ProcessSet decided = ProcessSet::Empty(n());
  std::size_t last_step = 0;
  for (const Decision& d : decisions) {
    if (d.step >= schedule.steps.size() || schedule.steps[d.step] != d.process) {
      throw InputError("decision at step " + std::to_string(d.step) +
                       " is not a step of process " + std::to_string(d.process));
    }
    if (decided.contains(d.process)) {
      throw InputError("process " + std::to_string(d.process) +
                       " decided more than once");
    }
    if (d.step < last_step) throw InputError("decisions out of step order");
    last_step = d.step;
    decided = decided.with(d.process);
  }
  if (!events.empty()) {
    if (events.size() != schedule.steps.size()) {
      throw InputError("event log length differs from the schedule length");
    }
    std::vector<int> seen(n(), 0);
    for (std::size_t i = 0; i < events.size(); ++i) {
      const Event& e = events[i];
      if (e.step != i || e.process != schedule.steps[i]) {
        throw InputError("event " + std::to_string(i) + " does not match the schedule");
      }
      const int k = ++seen[e.process - 1];
      const EventKind expected = k % 2 == 1 ? EventKind::kUpdate : EventKind::kSnapshot;
      if (e.kind != expected) {
        throw InputError("event " + std::to_string(i) +
                         " breaks update/snapshot alternation");
      }
    }
  }
}

}  // namespace advlab
