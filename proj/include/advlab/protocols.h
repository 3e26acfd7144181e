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

#ifndef ADVLAB_PROTOCOLS_H_
#define ADVLAB_PROTOCOLS_H_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "advlab/agreement_function.h"
#include "advlab/sim.h"

namespace advlab {

// One safe-agreement instance embedded in a process's cell under a register
// name. Levels: 1 while proposing, then 2 (candidate) or 0 (withdrawn) once.
// A process decides the value of the smallest-id level-2 process as soon as no
// level-1 register is visible.
class SafeAgreementSlot {
 public:
  enum class Poll { kPending, kBlocked, kDecided };

  explicit SafeAgreementSlot(std::string reg) : reg_(std::move(reg)) {}

  const std::string& reg() const { return reg_; }
  bool proposed() const { return phase_ != Phase::kIdle; }
  std::optional<Value> result() const { return result_; }

  // Stages (v, 1) in the process's cell.
  void Propose(Value v, Cell& cell);
  // Consumes one snapshot. May stage the level write in `cell`.
  Poll OnView(std::span<const std::optional<Cell>> view, ProcessId self,
              Cell& cell);

 private:
  enum class Phase { kIdle, kProposed, kLevelled, kDone };

  std::string reg_;
  Phase phase_ = Phase::kIdle;
  std::optional<Value> result_;
};

// Round-robin over `count` safe-agreement instances: propose to instance 0;
// whenever the current instance is blocked move to the next one, proposing
// there on first visit. The first instance seen to resolve gives the output,
// so at most `count` distinct values are output overall.
class RoundRobinAgreement {
 public:
  RoundRobinAgreement(const std::string& prefix, int count, Value proposal);

  int count() const { return static_cast<int>(slots_.size()); }
  void Start(Cell& cell);
  SafeAgreementSlot::Poll OnView(std::span<const std::optional<Cell>> view,
                                 ProcessId self, Cell& cell);
  std::optional<Value> result() const { return result_; }

 private:
  std::vector<SafeAgreementSlot> slots_;
  Value proposal_;
  std::size_t current_ = 0;
  std::optional<Value> result_;
};

// Every process writes its input and decides its own input.
class EchoProtocol : public Protocol {
 public:
  explicit EchoProtocol(std::vector<Value> inputs) : inputs_(std::move(inputs)) {}
  std::string name() const override { return "echo"; }
  int arity() const override { return static_cast<int>(inputs_.size()); }
  std::vector<Value> inputs() const override { return inputs_; }
  std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const override;

 private:
  std::vector<Value> inputs_;
};

// A single safe-agreement instance on the processes' inputs.
class SafeAgreementProtocol : public Protocol {
 public:
  explicit SafeAgreementProtocol(std::vector<Value> inputs)
      : inputs_(std::move(inputs)) {}
  std::string name() const override { return "safe-agreement"; }
  int arity() const override { return static_cast<int>(inputs_.size()); }
  std::vector<Value> inputs() const override { return inputs_; }
  std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const override;

 private:
  std::vector<Value> inputs_;
};

// alpha(scope) safe-agreement instances visited round-robin, each process
// proposing its input. Throws InputError when alpha(scope) == 0.
class AlphaSetConsensusProtocol : public Protocol {
 public:
  AlphaSetConsensusProtocol(AgreementFunction alpha, std::vector<Value> inputs);
  AlphaSetConsensusProtocol(AgreementFunction alpha, std::vector<Value> inputs,
                            ProcessSet scope);
  std::string name() const override { return "alpha-setcons"; }
  int arity() const override { return alpha_.n(); }
  std::vector<Value> inputs() const override { return inputs_; }
  int instances() const { return alpha_(scope_); }
  std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const override;

 private:
  AgreementFunction alpha_;
  std::vector<Value> inputs_;
  ProcessSet scope_;
};

// Shared stand-in for an alpha(parts)-agreement object: per parts value it
// admits the first alpha(parts) distinct proposals and answers any later one
// with the earliest admitted value.
class IdealAgreementOracle {
 public:
  explicit IdealAgreementOracle(AgreementFunction alpha)
      : alpha_(std::move(alpha)) {}
  // nullopt when alpha(parts) == 0.
  std::optional<Value> Propose(const ProcessSet& parts, Value v);

 private:
  AgreementFunction alpha_;
  std::map<std::uint32_t, std::vector<Value>> admitted_;
};

enum class Subroutine {
  kSafeAgreement,  // round-robin safe agreement inside the simulated memory
  kOracle,         // IdealAgreementOracle
};

const char* SubroutineName(Subroutine s);

// Adaptive set consensus: write (v, 0); snapshot for P; repeat { parts := P;
// adopt the value locked at the greatest level; v := alpha(parts)-agreement(v);
// write (v, |parts|); snapshot for P } until parts = P; decide v.
//
// A process inside the agreement call that is blocked (every visited instance
// blocked, or alpha(parts) == 0) and sees participation grow past parts
// abandons the call and restarts the loop body from that snapshot, keeping its
// current v and writing nothing at level |parts|.
class AdaptiveSetConsensusProtocol : public Protocol {
 public:
  AdaptiveSetConsensusProtocol(AgreementFunction alpha, std::vector<Value> inputs,
                               Subroutine subroutine);
  std::string name() const override { return "adaptive"; }
  int arity() const override { return alpha_.n(); }
  std::vector<Value> inputs() const override { return inputs_; }
  Subroutine subroutine() const { return subroutine_; }
  std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const override;

 private:
  AgreementFunction alpha_;
  std::vector<Value> inputs_;
  Subroutine subroutine_;
};

// Consensus between p2 and p3 for n = 3: both wait until p2's proposal is
// visible and decide it. p1 writes an empty cell and never decides.
class Cons23Protocol : public Protocol {
 public:
  explicit Cons23Protocol(std::vector<Value> inputs);
  std::string name() const override { return "cons23"; }
  int arity() const override { return 3; }
  std::vector<Value> inputs() const override { return inputs_; }
  std::vector<std::unique_ptr<ProcessLogic>> Instantiate() const override;

 private:
  std::vector<Value> inputs_;
};

// Register names used inside cells.
inline constexpr const char* kAdaptiveRegister = "R";
inline constexpr const char* kSafeAgreementRegister = "sa";
inline constexpr const char* kCons23Register = "c";

}  // namespace advlab

#endif  // ADVLAB_PROTOCOLS_H_
