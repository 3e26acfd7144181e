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

#ifndef ADVLAB_BGG_H_
#define ADVLAB_BGG_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"

namespace advlab {

// P_MEM slot of a simulated process: not started, started, provided an output.
enum class ProcessStatus { kBottom, kInitial, kTop };

// One R[j] slot: the process (0 = bottom) and live set a simulator selected.
struct SelectionEntry {
  ProcessId process = 0;
  ProcessSet live_set;

  friend bool operator==(const SelectionEntry&, const SelectionEntry&) = default;
};

struct BGSharedState {
  std::vector<SelectionEntry> r;      // index j-1, one per simulator
  std::vector<ProcessStatus> p_mem;   // index p-1

  // All R slots (bottom, empty) and all processes in `initial`.
  static BGSharedState Make(int simulators, int n, ProcessStatus initial);
};

struct BGSimulatorLocal {
  int id = 1;
  ProcessSet s_cur;
  ProcessId p_cur = 0;
  ProcessSet participating;  // P
  ProcessSet active;         // A
  ProcessSet window;         // W
  bool gate_open = false;    // outcome of the activity test in the last round
};

// (P, A): started processes, and started processes without an output.
std::pair<ProcessSet, ProcessSet> ReadParticipation(const BGSharedState& shared);

enum class StepResult { kSuccess, kBlocked };

// What a step oracle may observe about every simulator.
struct SimulatorStatus {
  int id = 0;
  bool live = true;
  bool gate_open = false;
  ProcessId p_cur = 0;
};

// Stands in for SimulateStep/AbortStep of the underlying BG machinery.
class StepOracle {
 public:
  virtual ~StepOracle() = default;
  virtual StepResult Attempt(int simulator, ProcessId p,
                             std::span<const SimulatorStatus> simulators) = 0;
};

// Blocks a step of p exactly while another live simulator that passed its
// activity test is currently working on p (its p_cur). Halted simulators never
// block.
class ContentionOracle : public StepOracle {
 public:
  StepResult Attempt(int simulator, ProcessId p,
                     std::span<const SimulatorStatus> simulators) override;
};

// Oracle driven by a callback; for tests.
class ScriptedOracle : public StepOracle {
 public:
  using Fn = std::function<StepResult(int, ProcessId, std::span<const SimulatorStatus>)>;
  explicit ScriptedOracle(Fn fn) : fn_(std::move(fn)) {}
  StepResult Attempt(int simulator, ProcessId p,
                     std::span<const SimulatorStatus> simulators) override {
    return fn_(simulator, p, simulators);
  }

 private:
  Fn fn_;
};

// Which simulators run the selection/simulation body. kVerbatim activates
// i >= min(|A|, alpha(P)); kInverted activates i <= min(|A|, alpha(P)).
// Under both, nothing is active once A is empty.
enum class GatePolarity { kVerbatim, kInverted };
const char* GatePolarityName(GatePolarity g);

// Live-set selection predicates over one adversary, with setcon(A|_{S,A})
// memoized per (S, A).
class LiveSetSelector {
 public:
  explicit LiveSetSelector(Adversary adversary);

  const Adversary& adversary() const { return adversary_; }
  // alpha_A(Pi), the number of simulators.
  int simulators() const { return simulators_; }

  // setcon({L in A|_S : L meets active}).
  int SetconWithin(const ProcessSet& s, const ProcessSet& active);

  // W := P; for j = simulators() down to i+1, narrow W to S_j \ {p_j} when
  // R[j] is set, S_j is inside W and setcon(A|_{S_j,A}) >= j.
  ProcessSet ComputeWindow(int i, const BGSharedState& shared,
                           const ProcessSet& participating,
                           const ProcessSet& active);

  bool SelectionValid(const ProcessSet& s_cur, const ProcessSet& window,
                      const ProcessSet& active, int i);

  struct Selection {
    ProcessSet live_set;
    bool predicate_branch = false;
  };
  // Smallest-encoding S in A|_W with setcon(A|_{S,A}) >= i; otherwise the
  // smallest-encoding member of A|_P. Throws SelectionImpossible when A|_P is
  // empty.
  Selection SelectLiveSet(const ProcessSet& window, const ProcessSet& active,
                          int i, const ProcessSet& participating);

 private:
  Adversary adversary_;
  SetconCache cache_;
  std::unordered_map<std::uint64_t, int> memo_;
  int simulators_;
};

enum class Branch { kNone, kKept, kPredicate, kFallback };
enum class RoundOutcome { kInactive, kSuccess, kBlocked };
const char* BranchName(Branch b);
const char* RoundOutcomeName(RoundOutcome o);

struct RoundOptions {
  GatePolarity gate = GatePolarity::kVerbatim;
  // Rewrite R[i] with the new p_cur after every successful step, not only on
  // reselection.
  bool publish_p_cur = true;
};

struct RoundRecord {
  int round = 0;
  int simulator = 0;
  ProcessSet participating;
  ProcessSet active;
  ProcessSet window;
  ProcessSet s_cur;
  ProcessId p_cur = 0;      // after the round
  ProcessId attempted = 0;  // process whose step was attempted, 0 if inactive
  RoundOutcome outcome = RoundOutcome::kInactive;
  Branch branch = Branch::kNone;
  std::vector<SelectionEntry> r_before;  // R as read at the start of the round
};

// Output decision for a simulated process after a successful step.
using OutputFn = std::function<bool(ProcessId p, int successful_steps)>;

// One iteration of the simulator loop for local.id. `simulators` is what the
// oracle sees about everyone (including this simulator). `steps` counts
// successful simulated steps per process (index p-1) and feeds `outputs`.
RoundRecord SimulatorRound(BGSimulatorLocal& local, BGSharedState& shared,
                           StepOracle& oracle, LiveSetSelector& selector,
                           const AgreementFunction& alpha,
                           std::vector<SimulatorStatus>& simulators,
                           std::vector<int>& steps, const OutputFn& outputs,
                           const RoundOptions& options);

struct BggConfig {
  std::vector<ProcessStatus> initial_p_mem;      // index p-1
  std::vector<std::optional<int>> halt_after;    // per simulator; round index
  std::vector<std::optional<int>> output_after;  // per process; successful steps
  int rounds = 0;
  RoundOptions options;
};

struct BggRun {
  Adversary adversary;
  AgreementFunction alpha;
  BggConfig config;
  std::vector<RoundRecord> history;
  BGSharedState final_state;
  std::vector<int> steps;  // successful simulated steps per process
};

// Runs all simulators round-robin (ascending id) for config.rounds rounds. A
// simulator with halt_after = h executes rounds 0..h-1 only. Uses a
// ContentionOracle unless one is supplied.
BggRun RunBggSelection(const Adversary& adversary, const BggConfig& config,
                       StepOracle* oracle = nullptr);
BggRun RunBggSelection(const Adversary& adversary, const AgreementFunction& alpha,
                       const BggConfig& config, StepOracle* oracle = nullptr);

enum class LemmaStatus { kPass, kFail, kNotApplicable, kInconclusive };
const char* LemmaStatusName(LemmaStatus s);

struct LemmaVerdict {
  std::string lemma;  // "window-stability", "predicate-branch", "live-set-simulated"
  LemmaStatus status = LemmaStatus::kPass;
  std::string detail;
};

inline constexpr int kRoundsPerProcess = 400;

// Checks the final quarter of a run. Lemmas are only asserted for fair
// adversaries with a never-output participant and a live simulator with id
// <= min(|A_f|, alpha(P_f)); runs shorter than 400 n rounds are inconclusive.
std::vector<LemmaVerdict> CheckSelectionLemmas(const BggRun& run);

}  // namespace advlab

#endif  // ADVLAB_BGG_H_
