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

// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"
#include "advlab/bgg.h"
#include "advlab/campaign.h"
#include "oracles.h"

namespace advlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

ProcessSet S(int n, std::initializer_list<ProcessId> m) { return ProcessSet::Of(n, m); }

Adversary A0Res() { return Adversary(3, {ProcessSet::Full(3)}); }
Adversary A1() { return Adversary(3, {S(3, {1}), S(3, {2, 3}), S(3, {1, 2, 3})}); }
Adversary A2() {
  std::vector<ProcessSet> sets;
  for (std::uint32_t b = 1; b < 8; ++b) {
    if (b != 0b011) sets.push_back(ProcessSet(3, b));
  }
  return Adversary(3, sets);
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome Criterion1() {
  const Adversary a = A1();
  const ProcessSet all = ProcessSet::Full(3);
  SetconCache cache;
  const int setcon = Setcon(a);
  const int restricted = cache.RestrictedIntersecting(a, all.bits(), S(3, {2, 3}).bits());
  const bool fair = IsFair(a);
  const auto witness = FindFairnessViolation(a);
  // 0 on {2} and {3}, 2 on the full set, 1 on every other non-empty set.
  std::vector<int> expected(8, 1);
  expected[0] = 0;
  expected[S(3, {2}).bits()] = 0;
  expected[S(3, {3}).bits()] = 0;
  expected[all.bits()] = 2;
  const bool table_ok = AgreementFunctionOf(a).table() == expected;
  const bool witness_ok = witness && witness->participating == all &&
                          witness->subset == S(3, {2, 3});
  return {setcon == 2 && restricted == 1 && !fair && table_ok && witness_ok,
          Fmt("setcon=%d restricted=%d fair=%s alpha_table=%s witness=%s", setcon,
              restricted, fair ? "true" : "false", table_ok ? "match" : "MISMATCH",
              witness_ok ? "P={1,2,3},Q={2,3}" : "other")};
}

Outcome Criterion2() {
  int checked = 0, exceptions = 0, oracle_mismatch = 0;
  auto visit = [&](const Adversary& a, bool required) {
    const bool fair = IsFair(a);
    if (fair != oracle::NaiveFair(oracle::FamilyOf(a), a.n())) ++oracle_mismatch;
    if (!required) return;
    ++checked;
    if (!fair) ++exceptions;
  };
  for (const Adversary& a : AllAdversaries(3)) {
    visit(a, IsSupersetClosed(a) || IsSymmetric(a));
  }
  const std::vector<Adversary> sc4 = SupersetClosedAdversaries(4);
  const std::vector<Adversary> sym4 = SymmetricAdversaries(4);
  for (const Adversary& a : sc4) visit(a, true);
  for (const Adversary& a : sym4) visit(a, true);
  return {exceptions == 0 && oracle_mismatch == 0,
          Fmt("checked=%d (n=4: %zu superset-closed, %zu symmetric) exceptions=%d "
              "naive-fairness mismatches=%d",
              checked, sc4.size(), sym4.size(), exceptions, oracle_mismatch)};
}

Outcome Criterion3() {
  int memo = 0, memo_bad = 0, csize = 0, csize_bad = 0, sym = 0, sym_bad = 0;
  for (const Adversary& a : AllAdversaries(3)) {
    ++memo;
    if (Setcon(a) != oracle::NaiveSetcon(oracle::FamilyOf(a))) ++memo_bad;
  }
  for (int n = 1; n <= 4; ++n) {
    for (const Adversary& a : SupersetClosedAdversaries(n)) {
      ++csize;
      if (Setcon(a) != oracle::BruteCsize(oracle::FamilyOf(a), n)) ++csize_bad;
    }
    for (const Adversary& a : SymmetricAdversaries(n)) {
      ++sym;
      if (Setcon(a) != oracle::DistinctSizes(oracle::FamilyOf(a))) ++sym_bad;
    }
  }
  return {memo_bad + csize_bad + sym_bad == 0,
          Fmt("memo-vs-naive %d/%d, setcon=csize %d/%d, setcon=distinct-sizes %d/%d",
              memo - memo_bad, memo, csize - csize_bad, csize, sym - sym_bad, sym)};
}

Outcome Criterion4() {
  SetconCache cache;
  std::uint64_t checked = 0, violations = 0;
  auto check = [&](const Adversary& a, std::uint32_t p, std::uint32_t q) {
    ++checked;
    const int lhs = cache.RestrictedIntersecting(a, p, q);
    const int rhs = std::min(std::popcount(q), cache.Restricted(a, p));
    if (lhs > rhs) ++violations;
  };
  for (const Adversary& a : AllAdversaries(3)) {
    for (std::uint32_t p = 0; p < 8; ++p) {
      for (std::uint32_t q = 0; q < 8; ++q) check(a, p, q);
    }
  }
  const std::uint64_t exhaustive = checked;
  std::mt19937_64 rng(20260401);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::uint32_t> bits;
    for (std::uint32_t b = 1; b < 16; ++b) {
      if (rng() & 1) bits.push_back(b);
    }
    const Adversary a = Adversary::FromSortedBits(4, bits);
    check(a, static_cast<std::uint32_t>(rng() % 16), static_cast<std::uint32_t>(rng() % 16));
  }
  return {violations == 0,
          Fmt("triples=%llu (n=3 exhaustive %llu, n=4 random %llu) violations=%llu",
              static_cast<unsigned long long>(checked),
              static_cast<unsigned long long>(exhaustive),
              static_cast<unsigned long long>(checked - exhaustive),
              static_cast<unsigned long long>(violations))};
}

Outcome Criterion5() {
  const Adversary a = A2();
  const bool fair = IsFair(a), sym = IsSymmetric(a), sc = IsSupersetClosed(a);
  const int setcon = Setcon(a);
  const int naive = oracle::NaiveSetcon(oracle::FamilyOf(a));
  return {fair && !sym && !sc && setcon == 2 && naive == 2,
          Fmt("fair=%s symmetric=%s superset_closed=%s setcon=%d naive=%d",
              fair ? "true" : "false", sym ? "true" : "false", sc ? "true" : "false",
              setcon, naive)};
}

std::string Counts(const CampaignReport& r) {
  std::string out;
  for (const auto& [name, count] : r.checked) {
    out += Fmt(" %s=%llu/%llu", name.c_str(),
               static_cast<unsigned long long>(count - (r.failed.contains(name) ? r.failed.at(name) : 0)),
               static_cast<unsigned long long>(count));
  }
  return out;
}

Outcome Criterion6() {
  CampaignConfig c;
  c.protocol = ProtocolKind::kSafeAgreement;
  c.n = 2;
  c.exhaustive = true;
  c.steps_per_process = 6;
  c.halts = 1;
  const CampaignReport r = RunCampaign(c);
  return {r.ok() && r.runs == CountSchedules(2, 6, 1),
          Fmt("schedules=%llu", static_cast<unsigned long long>(r.runs)) + Counts(r)};
}

Outcome Criterion7() {
  struct Model {
    std::string name;
    AgreementFunction alpha;
  };
  const std::vector<Model> models = {
      {"A0res", AgreementFunctionOf(A0Res())},
      {"A1", AgreementFunctionOf(A1())},
      {"A2", AgreementFunctionOf(A2())},
      {"wf", MakeWaitFree(3)},
      {"1res", MakeTResilient(3, 1)},
  };
  std::uint64_t runs = 0, failures = 0;
  std::string failed_in;
  auto account = [&](const std::string& label, const CampaignReport& r) {
    runs += r.runs;
    failures += r.total_failures();
    if (!r.ok()) failed_in += " " + label;
  };
  for (Subroutine sub : {Subroutine::kSafeAgreement, Subroutine::kOracle}) {
    for (const Model& m : models) {
      CampaignConfig c;
      c.protocol = ProtocolKind::kAdaptive;
      c.n = 3;
      c.alpha = m.alpha;
      c.subroutine = sub;
      c.seeds = 10000;
      account(m.name + "/" + SubroutineName(sub), RunCampaign(c));
    }
    for (const Adversary& a : AllAdversaries(2)) {
      if (a.empty()) continue;
      CampaignConfig c;
      c.protocol = ProtocolKind::kAdaptive;
      c.n = 2;
      c.alpha = AgreementFunctionOf(a);
      c.subroutine = sub;
      c.exhaustive = true;
      c.steps_per_process = 6;
      c.halts = 1;
      account("n2" + a.to_string() + "/" + SubroutineName(sub), RunCampaign(c));
    }
  }
  return {failures == 0,
          Fmt("runs=%llu failures=%llu (5 models x 10^4 seeds x 2 subroutines, "
              "n=2 exhaustive over 7 adversaries)",
              static_cast<unsigned long long>(runs),
              static_cast<unsigned long long>(failures)) + failed_in};
}

Outcome Criterion8() {
  const std::vector<std::pair<std::string, AgreementFunction>> models = {
      {"A1", AgreementFunctionOf(A1())},
      {"A2", AgreementFunctionOf(A2())},
      {"1res", MakeTResilient(3, 1)},
  };
  std::uint64_t enumerated = 0, seeded = 0, failures = 0;
  for (const auto& [name, alpha] : models) {
    if (alpha(ProcessSet::Full(3)) != 2) return {false, name + " does not have alpha=2"};
    CampaignConfig c;
    c.protocol = ProtocolKind::kAlphaSetcons;
    c.n = 3;
    c.alpha = alpha;
    c.exhaustive = true;
    c.steps_per_process = 4;
    c.halts = 1;
    const CampaignReport e = RunCampaign(c);
    enumerated += e.runs;
    failures += e.total_failures();
    c.exhaustive = false;
    c.seeds = 10000;
    const CampaignReport s = RunCampaign(c);
    seeded += s.runs;
    failures += s.total_failures();
  }
  return {failures == 0,
          Fmt("enumerated=%llu seeded=%llu violations=%llu",
              static_cast<unsigned long long>(enumerated),
              static_cast<unsigned long long>(seeded),
              static_cast<unsigned long long>(failures))};
}

struct SweepTally {
  int runs = 0;
  int failures = 0;
  std::map<std::string, int> applicable;
};

SweepTally LemmaSweep(GatePolarity gate) {
  const int n = 3;
  SweepTally tally;
  for (const Adversary& adv : AllAdversaries(n)) {
    if (adv.empty() || !IsFair(adv)) continue;
    const AgreementFunction alpha = AgreementFunctionOf(adv);
    const int sims = alpha(ProcessSet::Full(n));
    int patterns = 1;
    for (int i = 0; i < sims; ++i) patterns *= 3;
    for (std::uint32_t pb = 1; pb < (1u << n); ++pb) {
      const ProcessSet p(n, pb);
      if (alpha(p) < 1) continue;
      // Processes that eventually output; at least one participant never does.
      for (std::uint32_t ob = 0; ob < pb; ++ob) {
        if ((ob & ~pb) != 0) continue;
        for (int pattern = 0; pattern < patterns; ++pattern) {
          BggConfig c;
          c.rounds = kRoundsPerProcess * n;
          c.options = RoundOptions{gate, true};
          c.initial_p_mem.assign(n, ProcessStatus::kBottom);
          c.output_after.assign(n, std::nullopt);
          for (ProcessId q = 1; q <= n; ++q) {
            if (p.contains(q)) c.initial_p_mem[q - 1] = ProcessStatus::kInitial;
            if ((ob >> (q - 1)) & 1) c.output_after[q - 1] = 3;
          }
          // Per simulator: live, halted before its first round, halted a
          // third of the way in.
          for (int i = 0, x = pattern; i < sims; ++i, x /= 3) {
            const int d = x % 3;
            c.halt_after.push_back(d == 0   ? std::nullopt
                                   : d == 1 ? std::optional<int>(0)
                                            : std::optional<int>(c.rounds / 3));
          }
          const BggRun run = RunBggSelection(adv, alpha, c);
          ++tally.runs;
          for (const LemmaVerdict& v : CheckSelectionLemmas(run)) {
            if (v.status == LemmaStatus::kFail || v.status == LemmaStatus::kInconclusive) {
              ++tally.failures;
            }
            if (v.status == LemmaStatus::kPass) ++tally.applicable[v.lemma];
          }
        }
      }
    }
  }
  return tally;
}

Outcome Criterion9() {
  const SweepTally inverted = LemmaSweep(GatePolarity::kInverted);
  const SweepTally verbatim = LemmaSweep(GatePolarity::kVerbatim);
  std::string passes;
  for (const auto& [lemma, count] : inverted.applicable) {
    passes += Fmt(" %s=%d", lemma.c_str(), count);
  }
  return {inverted.failures == 0 && inverted.runs > 0,
          Fmt("gate=inverted runs=%d violations=%d; passes:", inverted.runs,
              inverted.failures) +
              passes +
              Fmt("; gate=verbatim violations=%d", verbatim.failures)};
}

Outcome Criterion10() {
  int checked = 0, bad = 0;
  for (const Adversary& a : AllAdversaries(3)) {
    ++checked;
    if (!IsMonotonic(AgreementFunctionOf(a))) ++bad;
  }
  return {bad == 0, Fmt("adversaries=%d non-monotonic=%d", checked, bad)};
}

}  // namespace
}  // namespace advlab

int main() {
  using advlab::Outcome;
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "counterexample adversary", 1, advlab::Criterion1},
      {2, "fairness of superset-closed and symmetric adversaries", 300, advlab::Criterion2},
      {3, "setcon oracle equivalence", 300, advlab::Criterion3},
      {4, "restricted setcon bound", 300, advlab::Criterion4},
      {5, "fair adversary that is neither symmetric nor superset-closed", 60,
       advlab::Criterion5},
      {6, "safe agreement exhaustive", 120, advlab::Criterion6},
      {7, "adaptive set consensus campaign", 600, advlab::Criterion7},
      {8, "round-robin safe agreement under alpha=2", 600, advlab::Criterion8},
      {9, "live-set selection lemmas", 600, advlab::Criterion9},
      {10, "agreement function monotonicity", 60, advlab::Criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL",
                c.id, c.name, o.detail.c_str(), secs, c.limit_seconds,
                in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failed;
}
