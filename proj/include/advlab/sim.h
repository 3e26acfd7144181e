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

#ifndef ADVLAB_SIM_H_
#define ADVLAB_SIM_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"
#include "advlab/trace.h"

namespace advlab {

// n single-writer positions with atomic update and snapshot. Linearization is
// the call order.
class SnapshotMemory {
 public:
  explicit SnapshotMemory(int n) : cells_(n) {}

  int n() const { return static_cast<int>(cells_.size()); }
  void Update(ProcessId p, Cell value) { cells_.at(p - 1) = std::move(value); }
  std::span<const std::optional<Cell>> Snapshot() const { return cells_; }
  const std::optional<Cell>& cell(ProcessId p) const { return cells_.at(p - 1); }

 private:
  std::vector<std::optional<Cell>> cells_;
};

// Per-step channel from a process back to the simulator.
class StepContext {
 public:
  // Throws ProtocolFault if the process already decided.
  void Decide(Value v);
  // A waiting process reports whether it currently sees itself blocked.
  void SetBlocked(bool blocked) { blocked_ = blocked; }

  bool decided() const { return decision_.has_value(); }
  std::optional<Value> decision() const { return decision_; }
  bool blocked() const { return blocked_; }

 private:
  std::optional<Value> decision_;
  bool blocked_ = false;
};

// One process of a protocol, driven by the simulator: OnUpdate on odd
// activations (returns the full contents to publish in the process's cell),
// OnSnapshot on even ones. Neither is called once the process has decided.
class ProcessLogic {
 public:
  virtual ~ProcessLogic() = default;
  virtual Cell OnUpdate() = 0;
  virtual void OnSnapshot(std::span<const std::optional<Cell>> view,
                          StepContext& ctx) = 0;
};

class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual std::string name() const = 0;
  virtual int arity() const = 0;
  // Index p-1.
  virtual std::vector<Value> inputs() const = 0;
  // Fresh state for one run.
  virtual std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const = 0;
};

struct ExecuteOptions {
  bool record_events = true;
};

// Runs the schedule step by step. Deterministic in (protocol, schedule).
// Throws InputError on arity mismatch or an invalid schedule.
RunTrace Execute(const Protocol& protocol, const Schedule& schedule,
                 const ExecuteOptions& options = {});

// Picks a live set L of the adversary as correct set and a participating set
// P with L subset of P; processes in P \ L halt after a random number of
// steps. Every correct process gets at least floor(budget / (2|L|)) steps and
// the total length is `budget`. Throws InputError for an empty adversary or
// budget < 2n.
Schedule GenerateSchedule(const Adversary& adversary, std::uint64_t seed,
                          std::size_t budget);

// Same construction, drawing P with alpha(P) >= 1 and at most alpha(P) - 1
// halted participants, so the schedule is admissible for alpha.
Schedule GenerateAdmissibleSchedule(const AgreementFunction& alpha,
                                    std::uint64_t seed, std::size_t budget);

// Appends `rounds` round-robin passes over the correct processes.
Schedule CompleteSchedule(const Schedule& schedule, int rounds);

inline constexpr int kMaxEnumeratedSteps = 14;

// Calls visit for every interleaving in which each process takes
// steps_per_process steps, except that up to halts_allowed processes may be
// chosen to halt after 1..steps_per_process steps. Throws InputError when
// n * steps_per_process exceeds kMaxEnumeratedSteps.
void EnumerateSchedules(int n, int steps_per_process, int halts_allowed,
                        const std::function<void(const Schedule&)>& visit);
std::uint64_t CountSchedules(int n, int steps_per_process, int halts_allowed);

bool CheckAlphaCompliance(const RunTrace& trace, const AgreementFunction& alpha);

}  // namespace advlab

#endif  // ADVLAB_SIM_H_
