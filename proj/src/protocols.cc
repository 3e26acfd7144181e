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

#include "advlab/protocols.h"

#include <algorithm>

namespace advlab {
namespace {

using View = std::span<const std::optional<Cell>>;

const Entry* Find(const std::optional<Cell>& cell, const std::string& reg) {
  if (!cell) return nullptr;
  const auto it = cell->find(reg);
  return it == cell->end() ? nullptr : &it->second;
}

void CheckInputs(const std::vector<Value>& inputs, int n) {
  if (static_cast<int>(inputs.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " inputs, got " +
                     std::to_string(inputs.size()));
  }
}

}  // namespace

void SafeAgreementSlot::Propose(Value v, Cell& cell) {
  cell[reg_] = Entry{v, 1};
  phase_ = Phase::kProposed;
}

SafeAgreementSlot::Poll SafeAgreementSlot::OnView(View view, ProcessId self,
                                                  Cell& cell) {
  switch (phase_) {
    case Phase::kIdle:
      throw ProtocolFault("safe agreement polled before proposing");
    case Phase::kProposed: {
      bool candidate_seen = false;
      for (std::size_t i = 0; i < view.size(); ++i) {
        const Entry* e = Find(view[i], reg_);
        if (static_cast<ProcessId>(i + 1) != self && e && e->level == 2) {
          candidate_seen = true;
        }
      }
      cell[reg_].level = candidate_seen ? 0 : 2;
      phase_ = Phase::kLevelled;
      return Poll::kPending;
    }
    case Phase::kLevelled: {
      const Entry* winner = nullptr;
      for (const auto& slot : view) {
        const Entry* e = Find(slot, reg_);
        if (!e) continue;
        if (e->level == 1) return Poll::kBlocked;
        if (e->level == 2 && !winner) winner = e;
      }
      if (!winner) {
        throw ProtocolFault("safe agreement '" + reg_ +
                            "' resolved without a level-2 candidate");
      }
      result_ = winner->value;
      phase_ = Phase::kDone;
      return Poll::kDecided;
    }
    case Phase::kDone:
      return Poll::kDecided;
  }
  return Poll::kPending;
}

RoundRobinAgreement::RoundRobinAgreement(const std::string& prefix, int count,
                                         Value proposal)
    : proposal_(proposal) {
  if (count < 1) throw InputError("round-robin agreement needs >= 1 instance");
  for (int j = 0; j < count; ++j) {
    slots_.emplace_back(prefix + "/" + std::to_string(j));
  }
}

void RoundRobinAgreement::Start(Cell& cell) { slots_[0].Propose(proposal_, cell); }

SafeAgreementSlot::Poll RoundRobinAgreement::OnView(View view, ProcessId self,
                                                    Cell& cell) {
  if (result_) return SafeAgreementSlot::Poll::kDecided;
  const auto poll = slots_[current_].OnView(view, self, cell);
  if (poll == SafeAgreementSlot::Poll::kDecided) {
    result_ = slots_[current_].result();
    return poll;
  }
  if (poll == SafeAgreementSlot::Poll::kPending) return poll;
  current_ = (current_ + 1) % slots_.size();
  if (!slots_[current_].proposed()) {
    slots_[current_].Propose(proposal_, cell);
    return SafeAgreementSlot::Poll::kPending;
  }
  return SafeAgreementSlot::Poll::kBlocked;
}

// --- echo -------------------------------------------------------------------

namespace {

class EchoProcess : public ProcessLogic {
 public:
  explicit EchoProcess(Value input) : input_(input) {}
  Cell OnUpdate() override { return Cell{{"v", Entry{input_, 0}}}; }
  void OnSnapshot(View, StepContext& ctx) override { ctx.Decide(input_); }

 private:
  Value input_;
};

}  // namespace

std::vector<std::unique_ptr<ProcessLogic>> EchoProtocol::Instantiate() const {
  std::vector<std::unique_ptr<ProcessLogic>> out;
  for (Value v : inputs_) out.push_back(std::make_unique<EchoProcess>(v));
  return out;
}

// --- safe agreement ---------------------------------------------------------

namespace {

class SafeAgreementProcess : public ProcessLogic {
 public:
  SafeAgreementProcess(ProcessId self, Value input)
      : self_(self), input_(input), slot_(kSafeAgreementRegister) {}

  Cell OnUpdate() override {
    if (!slot_.proposed()) slot_.Propose(input_, cell_);
    return cell_;
  }

  void OnSnapshot(View view, StepContext& ctx) override {
    const auto poll = slot_.OnView(view, self_, cell_);
    ctx.SetBlocked(poll == SafeAgreementSlot::Poll::kBlocked);
    if (poll == SafeAgreementSlot::Poll::kDecided) ctx.Decide(*slot_.result());
  }

 private:
  ProcessId self_;
  Value input_;
  SafeAgreementSlot slot_;
  Cell cell_;
};

}  // namespace

std::vector<std::unique_ptr<ProcessLogic>> SafeAgreementProtocol::Instantiate()
    const {
  std::vector<std::unique_ptr<ProcessLogic>> out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    out.push_back(std::make_unique<SafeAgreementProcess>(
        static_cast<ProcessId>(i + 1), inputs_[i]));
  }
  return out;
}

// --- round-robin alpha(P)-set consensus -------------------------------------

namespace {

class RoundRobinProcess : public ProcessLogic {
 public:
  RoundRobinProcess(ProcessId self, Value input, int instances)
      : self_(self), agreement_("rr", instances, input) {}

  Cell OnUpdate() override {
    if (!started_) {
      agreement_.Start(cell_);
      started_ = true;
    }
    return cell_;
  }

  void OnSnapshot(View view, StepContext& ctx) override {
    const auto poll = agreement_.OnView(view, self_, cell_);
    ctx.SetBlocked(poll == SafeAgreementSlot::Poll::kBlocked);
    if (poll == SafeAgreementSlot::Poll::kDecided) ctx.Decide(*agreement_.result());
  }

 private:
  ProcessId self_;
  RoundRobinAgreement agreement_;
  bool started_ = false;
  Cell cell_;
};

}  // namespace

AlphaSetConsensusProtocol::AlphaSetConsensusProtocol(AgreementFunction alpha,
                                                     std::vector<Value> inputs)
    : AlphaSetConsensusProtocol(alpha, std::move(inputs),
                                ProcessSet::Full(alpha.n())) {}

AlphaSetConsensusProtocol::AlphaSetConsensusProtocol(AgreementFunction alpha,
                                                     std::vector<Value> inputs,
                                                     ProcessSet scope)
    : alpha_(std::move(alpha)), inputs_(std::move(inputs)), scope_(scope) {
  CheckInputs(inputs_, alpha_.n());
  if (alpha_(scope_) < 1) {
    throw InputError("alpha(" + scope_.to_string() +
                     ") = 0: no set consensus level to run");
  }
}

std::vector<std::unique_ptr<ProcessLogic>> AlphaSetConsensusProtocol::Instantiate()
    const {
  std::vector<std::unique_ptr<ProcessLogic>> out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    out.push_back(std::make_unique<RoundRobinProcess>(
        static_cast<ProcessId>(i + 1), inputs_[i], instances()));
  }
  return out;
}

// --- adaptive set consensus -------------------------------------------------

std::optional<Value> IdealAgreementOracle::Propose(const ProcessSet& parts,
                                                   Value v) {
  const int level = alpha_(parts);
  if (level == 0) return std::nullopt;
  std::vector<Value>& admitted = admitted_[parts.bits()];
  if (std::find(admitted.begin(), admitted.end(), v) != admitted.end()) return v;
  if (static_cast<int>(admitted.size()) < level) {
    admitted.push_back(v);
    return v;
  }
  return admitted.front();
}

const char* SubroutineName(Subroutine s) {
  return s == Subroutine::kOracle ? "oracle" : "safe-agreement";
}

namespace {

class AdaptiveProcess : public ProcessLogic {
 public:
  AdaptiveProcess(ProcessId self, Value input,
                  std::shared_ptr<const AgreementFunction> alpha,
                  Subroutine subroutine,
                  std::shared_ptr<IdealAgreementOracle> oracle)
      : self_(self),
        alpha_(std::move(alpha)),
        subroutine_(subroutine),
        oracle_(std::move(oracle)),
        v_(input),
        parts_(ProcessSet::Empty(alpha_->n())) {}

  Cell OnUpdate() override {
    if (phase_ == Phase::kInit) {
      cell_[kAdaptiveRegister] = Entry{v_, 0};
      phase_ = Phase::kFirstSnapshot;
    }
    return cell_;
  }

  void OnSnapshot(View view, StepContext& ctx) override {
    ctx.SetBlocked(false);
    const ProcessSet seen = Participation(view);
    switch (phase_) {
      case Phase::kInit:
        throw ProtocolFault("adaptive set consensus snapshot before first write");
      case Phase::kFirstSnapshot:
        BeginIteration(view, seen, ctx);
        return;
      case Phase::kAgreement: {
        const auto poll = agreement_->OnView(view, self_, cell_);
        if (poll == SafeAgreementSlot::Poll::kDecided) {
          Lock(*agreement_->result());
        } else if (poll == SafeAgreementSlot::Poll::kBlocked) {
          if (seen != parts_) {
            BeginIteration(view, seen, ctx);
          } else {
            ctx.SetBlocked(true);
          }
        }
        return;
      }
      case Phase::kAwaitGrowth:
        if (seen != parts_) {
          BeginIteration(view, seen, ctx);
        } else {
          ctx.SetBlocked(true);
        }
        return;
      case Phase::kCheck:
        if (seen == parts_) {
          ctx.Decide(v_);
        } else {
          BeginIteration(view, seen, ctx);
        }
        return;
    }
  }

 private:
  enum class Phase { kInit, kFirstSnapshot, kAgreement, kAwaitGrowth, kCheck };

  ProcessSet Participation(View view) const {
    ProcessSet p = ProcessSet::Empty(alpha_->n());
    for (std::size_t i = 0; i < view.size(); ++i) {
      if (Find(view[i], kAdaptiveRegister)) p = p.with(static_cast<ProcessId>(i + 1));
    }
    return p;
  }

  // Loop body from "parts := P" up to the agreement call.
  void BeginIteration(View r, const ProcessSet& observed, StepContext& ctx) {
    parts_ = observed;
    agreement_.reset();
    // Adopt the value of the smallest id holding the greatest lock level.
    std::int64_t greatest = -1;
    for (const auto& slot : r) {
      const Entry* e = Find(slot, kAdaptiveRegister);
      if (e && e->level > greatest) {
        greatest = e->level;
        v_ = e->value;
      }
    }
    const int level = (*alpha_)(parts_);
    if (level == 0) {
      phase_ = Phase::kAwaitGrowth;
      ctx.SetBlocked(true);
      return;
    }
    if (subroutine_ == Subroutine::kOracle) {
      Lock(*oracle_->Propose(parts_, v_));
      return;
    }
    agreement_.emplace("a" + std::to_string(parts_.bits()), level, v_);
    agreement_->Start(cell_);
    phase_ = Phase::kAgreement;
  }

  void Lock(Value decided) {
    v_ = decided;
    cell_[kAdaptiveRegister] = Entry{v_, parts_.size()};
    phase_ = Phase::kCheck;
  }

  ProcessId self_;
  std::shared_ptr<const AgreementFunction> alpha_;
  Subroutine subroutine_;
  std::shared_ptr<IdealAgreementOracle> oracle_;
  Phase phase_ = Phase::kInit;
  Value v_;
  ProcessSet parts_;
  std::optional<RoundRobinAgreement> agreement_;
  Cell cell_;
};

}  // namespace

AdaptiveSetConsensusProtocol::AdaptiveSetConsensusProtocol(
    AgreementFunction alpha, std::vector<Value> inputs, Subroutine subroutine)
    : alpha_(std::move(alpha)), inputs_(std::move(inputs)), subroutine_(subroutine) {
  CheckInputs(inputs_, alpha_.n());
}

std::vector<std::unique_ptr<ProcessLogic>>
AdaptiveSetConsensusProtocol::Instantiate() const {
  auto alpha = std::make_shared<const AgreementFunction>(alpha_);
  auto oracle = std::make_shared<IdealAgreementOracle>(alpha_);
  std::vector<std::unique_ptr<ProcessLogic>> out;
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    out.push_back(std::make_unique<AdaptiveProcess>(
        static_cast<ProcessId>(i + 1), inputs_[i], alpha, subroutine_, oracle));
  }
  return out;
}

// --- Cons_{2,3} -------------------------------------------------------------

namespace {

class Cons23Process : public ProcessLogic {
 public:
  Cons23Process(ProcessId self, Value input) : self_(self), input_(input) {}

  Cell OnUpdate() override {
    if (self_ == 1) return Cell{};
    return Cell{{kCons23Register, Entry{input_, 0}}};
  }

  void OnSnapshot(View view, StepContext& ctx) override {
    if (self_ == 1) return;
    if (const Entry* e = Find(view[1], kCons23Register)) {
      ctx.Decide(e->value);
    } else {
      ctx.SetBlocked(true);
    }
  }

 private:
  ProcessId self_;
  Value input_;
};

}  // namespace

Cons23Protocol::Cons23Protocol(std::vector<Value> inputs)
    : inputs_(std::move(inputs)) {
  CheckInputs(inputs_, 3);
}

std::vector<std::unique_ptr<ProcessLogic>> Cons23Protocol::Instantiate() const {
  std::vector<std::unique_ptr<ProcessLogic>> out;
  for (ProcessId p = 1; p <= 3; ++p) {
    out.push_back(std::make_unique<Cons23Process>(p, inputs_[p - 1]));
  }
  return out;
}

}  // namespace advlab
