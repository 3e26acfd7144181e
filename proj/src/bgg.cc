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

#include "advlab/bgg.h"

#include <algorithm>
#include <utility>

#include "advlab/errors.h"

namespace advlab {

BGSharedState BGSharedState::Make(int simulators, int n,
                                  ProcessStatus initial) {
  BGSharedState s;
  s.r.assign(simulators, SelectionEntry{0, ProcessSet::Empty(n)});
  s.p_mem.assign(n, initial);
  return s;
}

std::pair<ProcessSet, ProcessSet> ReadParticipation(
    const BGSharedState& shared) {
  const int n = static_cast<int>(shared.p_mem.size());
  std::uint32_t p = 0, a = 0;
  for (int i = 0; i < n; ++i) {
    if (shared.p_mem[i] != ProcessStatus::kBottom) p |= 1u << i;
    if (shared.p_mem[i] == ProcessStatus::kInitial) a |= 1u << i;
  }
  return {ProcessSet(n, p), ProcessSet(n, a)};
}

StepResult ContentionOracle::Attempt(
    int simulator, ProcessId p, std::span<const SimulatorStatus> simulators) {
  for (const SimulatorStatus& s : simulators) {
    if (s.id != simulator && s.live && s.gate_open && s.p_cur == p) {
      return StepResult::kBlocked;
    }
  }
  return StepResult::kSuccess;
}

const char* GatePolarityName(GatePolarity g) {
  return g == GatePolarity::kVerbatim ? "verbatim" : "inverted";
}

const char* BranchName(Branch b) {
  switch (b) {
    case Branch::kNone: return "none";
    case Branch::kKept: return "kept";
    case Branch::kPredicate: return "predicate";
    case Branch::kFallback: return "fallback";
  }
  return "?";
}

const char* RoundOutcomeName(RoundOutcome o) {
  switch (o) {
    case RoundOutcome::kInactive: return "inactive";
    case RoundOutcome::kSuccess: return "success";
    case RoundOutcome::kBlocked: return "blocked";
  }
  return "?";
}

const char* LemmaStatusName(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::kPass: return "pass";
    case LemmaStatus::kFail: return "fail";
    case LemmaStatus::kNotApplicable: return "not-applicable";
    case LemmaStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

LiveSetSelector::LiveSetSelector(Adversary adversary)
    : adversary_(std::move(adversary)),
      simulators_(cache_.Setcon(adversary_)) {}

int LiveSetSelector::SetconWithin(const ProcessSet& s,
                                  const ProcessSet& active) {
  const std::uint64_t key =
      static_cast<std::uint64_t>(s.bits()) |
      (static_cast<std::uint64_t>(active.bits()) << 32);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::vector<std::uint32_t> sub;
  for (std::uint32_t l : adversary_.bits()) {
    if ((l & ~s.bits()) == 0 && (l & active.bits()) != 0) sub.push_back(l);
  }
  const int v = cache_.Setcon(sub);
  memo_.emplace(key, v);
  return v;
}

ProcessSet LiveSetSelector::ComputeWindow(int i, const BGSharedState& shared,
                                          const ProcessSet& participating,
                                          const ProcessSet& active) {
  ProcessSet w = participating;
  const int top = std::min<int>(simulators_, static_cast<int>(shared.r.size()));
  for (int j = top; j > i; --j) {
    const SelectionEntry& e = shared.r[j - 1];
    if (e.process != 0 && e.live_set.subset_of(w) &&
        SetconWithin(e.live_set, active) >= j) {
      w = e.live_set.without(e.process);
    }
  }
  return w;
}

bool LiveSetSelector::SelectionValid(const ProcessSet& s_cur,
                                     const ProcessSet& window,
                                     const ProcessSet& active, int i) {
  return s_cur.subset_of(window) && SetconWithin(s_cur, active) >= i;
}

LiveSetSelector::Selection LiveSetSelector::SelectLiveSet(
    const ProcessSet& window, const ProcessSet& active, int i,
    const ProcessSet& participating) {
  const int n = adversary_.n();
  for (std::uint32_t l : adversary_.bits()) {
    if ((l & ~window.bits()) != 0) continue;
    if (SetconWithin(ProcessSet(n, l), active) >= i) {
      return {ProcessSet(n, l), true};
    }
  }
  for (std::uint32_t l : adversary_.bits()) {
    if ((l & ~participating.bits()) == 0) return {ProcessSet(n, l), false};
  }
  throw SelectionImpossible("no live set inside participating set " +
                            participating.to_string());
}

namespace {

bool GateOpen(GatePolarity gate, int i, const ProcessSet& active,
              int alpha_p) {
  if (active.empty()) return false;
  const int bound = std::min(active.size(), alpha_p);
  return gate == GatePolarity::kVerbatim ? i >= bound : i <= bound;
}

}  // namespace

RoundRecord SimulatorRound(BGSimulatorLocal& local, BGSharedState& shared,
                           StepOracle& oracle, LiveSetSelector& selector,
                           const AgreementFunction& alpha,
                           std::vector<SimulatorStatus>& simulators,
                           std::vector<int>& steps, const OutputFn& outputs,
                           const RoundOptions& options) {
  const int i = local.id;
  RoundRecord rec;
  rec.simulator = i;
  rec.r_before = shared.r;

  auto [p, a] = ReadParticipation(shared);
  local.participating = p;
  local.active = a;
  rec.participating = p;
  rec.active = a;

  SimulatorStatus* self = nullptr;
  for (SimulatorStatus& s : simulators) {
    if (s.id == i) self = &s;
  }

  local.gate_open = GateOpen(options.gate, i, a, alpha(p));
  if (self != nullptr) self->gate_open = local.gate_open;
  if (!local.gate_open) {
    rec.window = local.window;
    rec.s_cur = local.s_cur;
    rec.p_cur = local.p_cur;
    return rec;
  }

  local.window = selector.ComputeWindow(i, shared, p, a);
  rec.window = local.window;
  if (local.s_cur.n() == 0) local.s_cur = ProcessSet::Empty(p.n());

  if (!selector.SelectionValid(local.s_cur, local.window, a, i)) {
    LiveSetSelector::Selection sel =
        selector.SelectLiveSet(local.window, a, i, p);
    local.s_cur = sel.live_set;
    local.p_cur = local.s_cur.first();
    shared.r[i - 1] = SelectionEntry{local.p_cur, local.s_cur};
    rec.branch = sel.predicate_branch ? Branch::kPredicate : Branch::kFallback;
  } else {
    rec.branch = Branch::kKept;
  }
  if (self != nullptr) self->p_cur = local.p_cur;

  rec.attempted = local.p_cur;
  if (oracle.Attempt(i, local.p_cur, simulators) == StepResult::kSuccess) {
    rec.outcome = RoundOutcome::kSuccess;
    const int done = ++steps[local.p_cur - 1];
    if (outputs && outputs(local.p_cur, done)) {
      shared.p_mem[local.p_cur - 1] = ProcessStatus::kTop;
    }
    local.p_cur = local.s_cur.next_after(local.p_cur);
    if (options.publish_p_cur) {
      shared.r[i - 1] = SelectionEntry{local.p_cur, local.s_cur};
    }
    if (self != nullptr) self->p_cur = local.p_cur;
  } else {
    rec.outcome = RoundOutcome::kBlocked;
  }
  rec.s_cur = local.s_cur;
  rec.p_cur = local.p_cur;
  return rec;
}

BggRun RunBggSelection(const Adversary& adversary, const BggConfig& config,
                       StepOracle* oracle) {
  return RunBggSelection(adversary, AgreementFunctionOf(adversary), config,
                         oracle);
}

BggRun RunBggSelection(const Adversary& adversary,
                       const AgreementFunction& alpha, const BggConfig& config,
                       StepOracle* oracle) {
  const int n = adversary.n();
  if (alpha.n() != n) throw InputError("alpha universe differs from adversary");
  if (static_cast<int>(config.initial_p_mem.size()) != n) {
    throw InputError("initial P_MEM must have one entry per process");
  }
  LiveSetSelector selector(adversary);
  const int m = selector.simulators();
  if (static_cast<int>(config.halt_after.size()) > m) {
    throw InputError("halt pattern names more simulators than alpha(Pi)");
  }

  ContentionOracle contention;
  StepOracle& step = oracle != nullptr ? *oracle : contention;

  BggRun run{adversary, alpha, config, {}, {}, std::vector<int>(n, 0)};
  BGSharedState& shared = run.final_state;
  shared = BGSharedState::Make(m, n, ProcessStatus::kBottom);
  shared.p_mem = config.initial_p_mem;

  std::vector<BGSimulatorLocal> locals(m);
  std::vector<SimulatorStatus> status(m);
  for (int s = 0; s < m; ++s) {
    locals[s].id = s + 1;
    locals[s].s_cur = ProcessSet::Empty(n);
    locals[s].window = ProcessSet::Empty(n);
    locals[s].participating = ProcessSet::Empty(n);
    locals[s].active = ProcessSet::Empty(n);
    status[s].id = s + 1;
  }
  auto halt_of = [&](int s) -> std::optional<int> {
    return s < static_cast<int>(config.halt_after.size()) ? config.halt_after[s]
                                                          : std::nullopt;
  };
  OutputFn outputs = [&](ProcessId p, int done) {
    const auto& after = config.output_after;
    return p - 1 < static_cast<int>(after.size()) && after[p - 1].has_value() &&
           done >= *after[p - 1];
  };

  run.history.reserve(static_cast<std::size_t>(config.rounds) * m);
  for (int round = 0; round < config.rounds; ++round) {
    for (int s = 0; s < m; ++s) {
      std::optional<int> h = halt_of(s);
      status[s].live = !h.has_value() || round < *h;
    }
    for (int s = 0; s < m; ++s) {
      if (!status[s].live) continue;
      RoundRecord rec = SimulatorRound(locals[s], shared, step, selector, alpha,
                                       status, run.steps, outputs,
                                       config.options);
      rec.round = round;
      run.history.push_back(std::move(rec));
    }
  }
  return run;
}

namespace {

LemmaVerdict Verdict(const char* lemma, LemmaStatus status,
                     std::string detail = {}) {
  return LemmaVerdict{lemma, status, std::move(detail)};
}

std::vector<LemmaVerdict> AllWith(LemmaStatus status,
                                  const std::string& detail) {
  return {Verdict("window-stability", status, detail),
          Verdict("predicate-branch", status, detail),
          Verdict("live-set-simulated", status, detail)};
}

}  // namespace

std::vector<LemmaVerdict> CheckSelectionLemmas(const BggRun& run) {
  const Adversary& adv = run.adversary;
  const int n = adv.n();
  if (!IsFair(adv)) {
    return AllWith(LemmaStatus::kNotApplicable, "adversary is not fair");
  }
  const int rounds = run.config.rounds;
  if (rounds < kRoundsPerProcess * n) {
    return AllWith(LemmaStatus::kInconclusive,
                   "budget " + std::to_string(rounds) + " below " +
                       std::to_string(kRoundsPerProcess * n) + " rounds");
  }
  const int tail = rounds - rounds / 4;

  // P_MEM must be frozen over the tail.
  auto [p_f, a_f] = ReadParticipation(run.final_state);
  for (const RoundRecord& r : run.history) {
    if (r.round >= tail && (r.participating != p_f || r.active != a_f)) {
      return AllWith(LemmaStatus::kInconclusive,
                     "participation still changing in the final quarter");
    }
  }
  if (a_f.empty()) {
    return AllWith(LemmaStatus::kNotApplicable,
                   "every participating process has an output");
  }

  LiveSetSelector selector(adv);
  const int sims = selector.simulators();
  const int bound = std::min(a_f.size(), run.alpha(p_f));
  auto live = [&](int s) {
    const auto& h = run.config.halt_after;
    return s - 1 >= static_cast<int>(h.size()) || !h[s - 1].has_value() ||
           *h[s - 1] >= rounds;
  };
  int m = 0;
  for (int s = std::min(bound, sims); s >= 1; --s) {
    if (live(s)) {
      m = s;
      break;
    }
  }
  if (m == 0) {
    return AllWith(LemmaStatus::kNotApplicable,
                   "no live simulator with id <= " + std::to_string(bound));
  }

  std::vector<LemmaVerdict> out;

  // Window after iteration m+1, as each eligible simulator would compute it.
  {
    std::optional<ProcessSet> w_mf;
    std::string detail;
    LemmaStatus status = LemmaStatus::kPass;
    BGSharedState frozen = run.final_state;
    for (const RoundRecord& r : run.history) {
      if (r.round < tail || r.simulator > bound || !live(r.simulator)) continue;
      frozen.r = r.r_before;
      ProcessSet w = selector.ComputeWindow(m, frozen, r.participating,
                                            r.active);
      if (!w_mf) {
        w_mf = w;
      } else if (w != *w_mf) {
        status = LemmaStatus::kFail;
        detail = "round " + std::to_string(r.round) + " simulator " +
                 std::to_string(r.simulator) + ": window " + w.to_string() +
                 " differs from " + w_mf->to_string();
        break;
      }
    }
    if (status == LemmaStatus::kPass && w_mf) {
      detail = "W_{m,f} = " + w_mf->to_string() + ", m = " + std::to_string(m);
    }
    out.push_back(Verdict("window-stability", status, detail));
  }

  {
    LemmaStatus status = LemmaStatus::kPass;
    std::string detail;
    for (const RoundRecord& r : run.history) {
      if (r.round < tail || r.simulator > bound || !live(r.simulator)) continue;
      if (r.branch == Branch::kFallback) {
        status = LemmaStatus::kFail;
        detail = "round " + std::to_string(r.round) + " simulator " +
                 std::to_string(r.simulator) + " fell back to " +
                 r.s_cur.to_string();
        break;
      }
    }
    out.push_back(Verdict("predicate-branch", status, detail));
  }

  {
    std::uint32_t stepped = 0;
    bool m_pcur_stable = true, m_scur_stable = true;
    std::optional<ProcessId> p_mf;
    std::optional<ProcessSet> s_mf;
    for (const RoundRecord& r : run.history) {
      if (r.round < tail) continue;
      if (r.outcome == RoundOutcome::kSuccess) stepped |= 1u << (r.attempted - 1);
      if (r.simulator == m) {
        if (!p_mf) p_mf = r.attempted;
        if (!s_mf) s_mf = r.s_cur;
        if (r.attempted != *p_mf) m_pcur_stable = false;
        if (r.s_cur != *s_mf) m_scur_stable = false;
      }
    }
    const ProcessSet st(n, stepped);
    LemmaStatus status = LemmaStatus::kFail;
    std::string detail = "stepped set " + st.to_string();
    if (adv.contains(st) && st.intersects(a_f)) {
      status = LemmaStatus::kPass;
      detail += " is a live set meeting A_f " + a_f.to_string();
    } else if (m_pcur_stable && m_scur_stable && p_mf && *p_mf != 0) {
      bool avoided = true;
      for (const RoundRecord& r : run.history) {
        if (r.round < tail || r.simulator >= m || !live(r.simulator)) continue;
        if (r.outcome != RoundOutcome::kInactive &&
            !r.s_cur.subset_of(s_mf->without(*p_mf))) {
          avoided = false;
        }
      }
      if (avoided) {
        status = LemmaStatus::kPass;
        detail += "; simulator " + std::to_string(m) + " stable on p" +
                  std::to_string(*p_mf) + " in " + s_mf->to_string() +
                  " and lower simulators avoid it";
      } else {
        detail += "; simulator " + std::to_string(m) + " stable on p" +
                  std::to_string(*p_mf) + " but a lower simulator selects it";
      }
    } else {
      detail += " is not a live set meeting A_f " + a_f.to_string();
    }
    out.push_back(Verdict("live-set-simulated", status, detail));
  }
  return out;
}

}  // namespace advlab
