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

#ifndef ADVLAB_TRACE_H_
#define ADVLAB_TRACE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advlab/process_set.h"

namespace advlab {

using Value = std::int64_t;

// One register inside a process's snapshot cell: a value and an integer tag
// (safe-agreement level, lock level, ...). A register that was never written
// is simply absent from the cell.
struct Entry {
  Value value = 0;
  std::int64_t level = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Contents of one snapshot-memory position. Several shared objects can live in
// the same memory by using distinct register names.
using Cell = std::map<std::string, Entry>;

// Canonical text: "name=value:level" joined by ';' in name order. The empty
// cell is "".
std::string CellToText(const Cell& cell);
// Throws InputError on malformed text.
Cell CellFromText(std::string_view text);

// A run prefix: the order in which processes take steps. The k-th occurrence
// of a process is an update when k is odd and a snapshot when k is even.
struct Schedule {
  int n = 0;
  std::vector<ProcessId> steps;
  // Per process (index p-1): the process takes no step at any index >= this.
  std::vector<std::optional<std::size_t>> halted_at;
  ProcessSet correct_set;

  static Schedule Make(int n, std::vector<ProcessId> steps,
                       ProcessSet correct_set);

  ProcessSet participating() const;
  ProcessSet halted() const;
  int step_count(ProcessId p) const;
  // Throws InputError when the invariants do not hold.
  void Validate() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class EventKind { kUpdate, kSnapshot };

struct Event {
  std::size_t step = 0;
  ProcessId process = 0;
  EventKind kind = EventKind::kUpdate;
  Cell written;                           // kUpdate
  std::vector<std::optional<Cell>> view;  // kSnapshot; nullopt = unwritten

  friend bool operator==(const Event&, const Event&) = default;
};

struct Decision {
  std::size_t step = 0;
  ProcessId process = 0;
  Value value = 0;

  friend bool operator==(const Decision&, const Decision&) = default;
};

// Terminal flag of a process at the end of a finite trace. kHalted stands in
// for "took only finitely many steps".
enum class Terminal { kRunning, kHalted, kAbsent };

const char* TerminalName(Terminal t);

struct RunTrace {
  std::string protocol;
  Schedule schedule;
  std::vector<Value> inputs;  // index p-1
  std::vector<Event> events;
  std::vector<Decision> decisions;
  ProcessSet participating;
  std::vector<Terminal> terminal;  // index p-1
  // Processes that ended the trace reporting a blocked wait.
  ProcessSet blocked;

  int n() const { return schedule.n; }
  // Processes with at least one step at an index <= step.
  ProcessSet ParticipatingAt(std::size_t step) const;
  std::optional<Value> DecisionOf(ProcessId p) const;
  // Participants flagged halted that never decided.
  ProcessSet HaltedUndecided() const;
  // Prefix of the trace up to and including schedule index `step`.
  RunTrace TruncatedAt(std::size_t step) const;
  // Throws InputError when the invariants do not hold.
  void Validate() const;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

}  // namespace advlab

#endif  // ADVLAB_TRACE_H_
