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

// advlab: command-line front end.
//
//   advlab setcon   --adversary FILE
//   advlab classify --adversary FILE
//   advlab alpha    --adversary FILE [--out DIR]
//   advlab compare  --alpha FILE --other FILE
//   advlab simulate --protocol NAME (--adversary F | --alpha F | --model M --n N)
//   advlab enumerate --protocol NAME ... --steps S --halts H
//   advlab check    --trace FILE [--alpha FILE] [--k K]
//   advlab bgg      --adversary FILE [--gate G] [--halt S:R,...]
//
// Exit codes: 0 all checks pass (or not applicable), 1 property violation
// (witness written under --out), 2 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"
#include "advlab/bgg.h"
#include "advlab/campaign.h"
#include "advlab/checkers.h"
#include "advlab/errors.h"
#include "advlab/io.h"

namespace advlab {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr std::uint64_t kDefaultSeed = 1;
constexpr const char* kDefaultOut = "advlab-out";

struct Options {
  std::string adversary;
  std::string alpha;
  std::string other;
  std::string model;
  int n = 0;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  int seeds = 1;
  std::optional<std::size_t> budget;

  std::string protocol;
  std::string subroutine = "safe-agreement";
  std::vector<Value> inputs;
  int completion = 32;
  bool all_traces = false;
  int steps = 2;
  int halts = 0;
  bool count_only = false;

  std::string trace;
  std::optional<int> k;

  std::string gate = "verbatim";
  std::string r_writes = "every-step";
  std::vector<int> participating;
  std::string halt_pattern;
  std::string output_pattern;
};

bool IsJson(const Options& o) { return o.format == "json"; }

std::size_t Budget(const Options& o, std::size_t fallback) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("ADVLAB_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("ADVLAB_BUDGET must be a positive integer, got '") +
                     env + "'");
  }
  return fallback;
}

Adversary LoadAdversary(const std::string& path) {
  if (path.empty()) throw InputError("--adversary is required");
  return AdversaryFromJson(ReadJsonFile(path));
}

AgreementFunction LoadAlpha(const std::string& path, bool require_monotonic) {
  AgreementFunction alpha = AlphaFromJson(ReadJsonFile(path));
  if (require_monotonic && !IsMonotonic(alpha)) {
    throw InputError(path + ": alpha table is not monotonic (needs alpha(empty) = 0 "
                     "and P subset of P' => alpha(P) <= alpha(P') <= |P'|)");
  }
  return alpha;
}

// "wf", "tres:T" or "kconc:K".
AgreementFunction ParseModel(const std::string& model, int n) {
  if (n < 1) throw InputError("--model needs --n");
  const auto colon = model.find(':');
  const std::string kind = model.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(model.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("malformed --model '" + model + "'");
    }
  }
  if (kind == "wf" && colon == std::string::npos) return MakeWaitFree(n);
  if (kind == "tres" && colon != std::string::npos) return MakeTResilient(n, arg);
  if (kind == "kconc" && colon != std::string::npos) return MakeKConcurrent(n, arg);
  throw InputError("unknown --model '" + model + "' (wf, tres:T, kconc:K)");
}

std::vector<std::pair<int, int>> ParsePairs(const std::string& text,
                                            const std::string& flag) {
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t a = 0, b = 0;
      const int key = std::stoi(item.substr(0, colon), &a);
      const int value = std::stoi(item.substr(colon + 1), &b);
      if (a != colon || b != item.size() - colon - 1) throw std::invalid_argument(item);
      out.emplace_back(key, value);
    } catch (const std::exception&) {
      throw InputError(flag + ": expected ID:VALUE pairs, got '" + item + "'");
    }
    pos = comma + 1;
  }
  return out;
}

void Print(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---- setcon / classify / alpha / compare ----

int CmdSetcon(const Options& o) {
  const Adversary a = LoadAdversary(o.adversary);
  const SetconWitness w = ComputeSetconWitness(a);
  std::optional<int> csize, sym;
  if (IsSupersetClosed(a) && !a.empty()) csize = Csize(a);
  if (IsSymmetric(a)) sym = SymmetricSetcon(a);
  if (IsJson(o)) {
    Json j = Json::object();
    j["setcon"] = w.value;
    j["csize"] = csize ? Json(*csize) : Json(nullptr);
    j["symmetric_setcon"] = sym ? Json(*sym) : Json(nullptr);
    Json chain = Json::array();
    for (const SetconStep& s : w.chain) {
      Json step = Json::object();
      step["live_set"] = ProcessSetToJson(s.live_set);
      step["removed"] = s.removed;
      chain.push_back(std::move(step));
    }
    j["chain"] = std::move(chain);
    Print(j);
    return kExitOk;
  }
  std::cout << "setcon=" << w.value << '\n';
  if (csize) std::cout << "csize=" << *csize << '\n';
  if (sym) std::cout << "symmetric_setcon=" << *sym << '\n';
  for (const SetconStep& s : w.chain) {
    std::cout << "chain " << s.live_set.to_string() << " drop p" << s.removed << '\n';
  }
  return kExitOk;
}

int CmdClassify(const Options& o) {
  const Adversary a = LoadAdversary(o.adversary);
  const bool sc = IsSupersetClosed(a);
  const bool sym = IsSymmetric(a);
  const std::optional<FairnessViolation> v = FindFairnessViolation(a);
  if (IsJson(o)) {
    Json j = Json::object();
    j["superset_closed"] = sc;
    j["symmetric"] = sym;
    j["fair"] = !v.has_value();
    if (v) {
      Json w = Json::object();
      w["P"] = ProcessSetToJson(v->participating);
      w["Q"] = ProcessSetToJson(v->subset);
      w["restricted_setcon"] = v->restricted_setcon;
      w["bound"] = v->bound;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    Print(j);
    return kExitOk;
  }
  std::cout << std::boolalpha << "superset_closed=" << sc << "\nsymmetric=" << sym
            << "\nfair=" << !v.has_value() << '\n';
  if (v) {
    std::cout << "witness P=" << v->participating.to_string()
              << " Q=" << v->subset.to_string()
              << " setcon(A|P,Q)=" << v->restricted_setcon
              << " min(|Q|,setcon(A|P))=" << v->bound << '\n';
  }
  return kExitOk;
}

int CmdAlpha(const Options& o) {
  const Adversary a = LoadAdversary(o.adversary);
  const AgreementFunction alpha = AgreementFunctionOf(a);
  if (!o.out.empty()) WriteJsonFile(fs::path(o.out) / "alpha.json", AlphaToJson(alpha));
  if (IsJson(o)) {
    Print(AlphaToJson(alpha));
    return kExitOk;
  }
  ForEachSubset(a.n(), [&](const ProcessSet& p) {
    std::cout << "alpha(" << p.to_string() << ")=" << alpha(p) << '\n';
  });
  return kExitOk;
}

int CmdCompare(const Options& o) {
  if (o.alpha.empty() || o.other.empty()) {
    throw InputError("compare needs --alpha and --other");
  }
  const AgreementFunction a = LoadAlpha(o.alpha, false);
  const AgreementFunction b = LoadAlpha(o.other, false);
  const Comparison c = ComparePointwise(a, b);
  if (IsJson(o)) {
    Json j = Json::object();
    j["relation"] = ComparisonName(c);
    Print(j);
  } else {
    std::cout << "relation=" << ComparisonName(c) << '\n';
  }
  return kExitOk;
}

// ---- simulate / enumerate ----

CampaignConfig MakeCampaign(const Options& o) {
  CampaignConfig c;
  const std::optional<ProtocolKind> kind = ParseProtocolKind(o.protocol);
  if (!kind) throw InputError("unknown protocol '" + o.protocol + "'");
  c.protocol = *kind;
  if (!o.adversary.empty()) c.adversary = LoadAdversary(o.adversary);
  if (!o.alpha.empty()) c.alpha = LoadAlpha(o.alpha, true);
  if (!o.model.empty()) {
    if (c.alpha) throw InputError("--model and --alpha are exclusive");
    c.alpha = ParseModel(o.model, o.n);
  }
  if (c.adversary) {
    c.n = c.adversary->n();
  } else if (c.alpha) {
    c.n = c.alpha->n();
  } else {
    c.n = o.n;
  }
  if (c.n < 1) throw InputError("give --adversary, --alpha, --model or --n");
  if (o.n != 0 && o.n != c.n) throw InputError("--n disagrees with the input files");
  if (o.subroutine == "oracle") {
    c.subroutine = Subroutine::kOracle;
  } else if (o.subroutine == "safe-agreement") {
    c.subroutine = Subroutine::kSafeAgreement;
  } else {
    throw InputError("unknown --subroutine '" + o.subroutine + "'");
  }
  c.inputs = o.inputs;
  c.seed = o.seed;
  c.seeds = o.seeds;
  c.budget = Budget(o, static_cast<std::size_t>(100 * c.n));
  c.completion_rounds = o.completion;
  c.steps_per_process = o.steps;
  c.halts = o.halts;
  c.keep_failures = 8;
  return c;
}

int Report(const Options& o, const CampaignConfig& c, const CampaignReport& r) {
  Json summary = Json::object();
  summary["protocol"] = ProtocolKindName(c.protocol);
  summary["n"] = c.n;
  summary["mode"] = c.exhaustive ? "exhaustive" : "seeded";
  if (c.exhaustive) {
    summary["steps_per_process"] = c.steps_per_process;
    summary["halts"] = c.halts;
  } else {
    summary["seed"] = c.seed;
    summary["seeds"] = c.seeds;
    summary["budget"] = c.budget;
  }
  summary["completion_rounds"] = c.completion_rounds;
  summary["runs"] = r.runs;
  summary["skipped"] = r.skipped;
  Json props = Json::object();
  for (const auto& [property, count] : r.checked) {
    Json p = Json::object();
    p["checked"] = count;
    auto it = r.failed.find(property);
    p["failed"] = it == r.failed.end() ? 0 : it->second;
    props[property] = std::move(p);
  }
  summary["properties"] = std::move(props);
  summary["failures"] = r.total_failures();

  if (!r.ok() || !o.out.empty()) {
    const fs::path dir = o.out.empty() ? fs::path(kDefaultOut) : fs::path(o.out);
    for (std::size_t i = 0; i < r.failures.size(); ++i) {
      const RunFailure& f = r.failures[i];
      Json w = VerdictToJson(f.verdict);
      w["origin"] = f.origin;
      const std::string stem = "witness-" + std::to_string(i);
      WriteJsonFile(dir / (stem + ".verdict.json"), w);
      WriteJsonFile(dir / (stem + ".trace.json"), TraceToJson(f.trace));
    }
    WriteJsonFile(dir / "summary.json", summary);
    if (!r.ok()) std::cerr << "witnesses written to " << dir.string() << '\n';
  }

  if (IsJson(o)) {
    Print(summary);
  } else {
    std::cout << "protocol=" << summary["protocol"].get<std::string>()
              << " n=" << c.n << " mode=" << summary["mode"].get<std::string>();
    if (!c.exhaustive) std::cout << " seed=" << c.seed << " seeds=" << c.seeds;
    std::cout << "\nruns=" << r.runs << " skipped=" << r.skipped << '\n';
    for (const auto& [property, count] : r.checked) {
      auto it = r.failed.find(property);
      std::cout << property << ": checked=" << count
                << " failed=" << (it == r.failed.end() ? 0 : it->second) << '\n';
    }
    for (const RunFailure& f : r.failures) {
      std::cout << "FAIL " << f.verdict.property << " (" << f.origin << ") "
                << f.verdict.witness->detail << '\n';
    }
    std::cout << "failures=" << r.total_failures() << '\n';
  }
  return r.ok() ? kExitOk : kExitViolation;
}

int CmdSimulate(const Options& o) {
  CampaignConfig c = MakeCampaign(o);
  const CampaignReport r = RunCampaign(c);
  if (o.all_traces) {
    const fs::path dir = o.out.empty() ? fs::path(kDefaultOut) : fs::path(o.out);
    const std::unique_ptr<Protocol> protocol = MakeProtocol(c);
    const AgreementFunction model = ScheduleModel(c);
    for (int i = 0; i < c.seeds; ++i) {
      const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
      const Schedule s = (!c.alpha && c.adversary)
                             ? GenerateSchedule(*c.adversary, seed, c.budget)
                             : GenerateAdmissibleSchedule(model, seed, c.budget);
      WriteJsonFile(dir / ("trace-" + std::to_string(seed) + ".json"),
                    TraceToJson(Execute(*protocol, CompleteSchedule(s, c.completion_rounds))));
    }
  }
  return Report(o, c, r);
}

int CmdEnumerate(const Options& o) {
  CampaignConfig c = MakeCampaign(o);
  c.exhaustive = true;
  if (o.count_only) {
    const std::uint64_t count = CountSchedules(c.n, c.steps_per_process, c.halts);
    if (IsJson(o)) {
      Json j = Json::object();
      j["schedules"] = count;
      Print(j);
    } else {
      std::cout << "schedules=" << count << '\n';
    }
    return kExitOk;
  }
  return Report(o, c, RunCampaign(c));
}

// ---- check ----

int CmdCheck(const Options& o) {
  if (o.trace.empty()) throw InputError("--trace is required");
  const RunTrace trace = TraceFromJson(ReadJsonFile(o.trace));
  std::vector<Verdict> verdicts;
  verdicts.push_back(CheckValidity(trace, trace.inputs));
  verdicts.push_back(CheckTermination(trace));
  if (!o.alpha.empty()) {
    verdicts.push_back(CheckAlphaAgreement(trace, LoadAlpha(o.alpha, true)));
  }
  if (o.k) verdicts.push_back(CheckKAgreement(trace, *o.k));
  if (trace.protocol == "adaptive" && !trace.events.empty()) {
    verdicts.push_back(CheckLevelLock(trace, kAdaptiveRegister));
  }
  bool ok = true;
  Json all = Json::array();
  for (const Verdict& v : verdicts) {
    ok = ok && v.pass;
    all.push_back(VerdictToJson(v));
  }
  if (!ok || !o.out.empty()) {
    const fs::path dir = o.out.empty() ? fs::path(kDefaultOut) : fs::path(o.out);
    WriteJsonFile(dir / "verdicts.json", all);
  }
  if (IsJson(o)) {
    Print(all);
  } else {
    for (const Verdict& v : verdicts) {
      std::cout << v.property << '=' << (v.pass ? "pass" : "fail");
      if (v.witness) {
        std::cout << " step=" << v.witness->step << " process=" << v.witness->process
                  << " " << v.witness->detail;
      }
      std::cout << '\n';
    }
  }
  return ok ? kExitOk : kExitViolation;
}

// ---- bgg ----

int CmdBgg(const Options& o) {
  const Adversary a = LoadAdversary(o.adversary);
  const int n = a.n();
  const AgreementFunction alpha = AgreementFunctionOf(a);
  const int sims = alpha(ProcessSet::Full(n));

  BggConfig c;
  c.rounds = static_cast<int>(Budget(o, static_cast<std::size_t>(kRoundsPerProcess * n)));
  if (o.gate == "verbatim") {
    c.options.gate = GatePolarity::kVerbatim;
  } else if (o.gate == "inverted") {
    c.options.gate = GatePolarity::kInverted;
  } else {
    throw InputError("--gate must be verbatim or inverted");
  }
  if (o.r_writes == "every-step") {
    c.options.publish_p_cur = true;
  } else if (o.r_writes == "reselect") {
    c.options.publish_p_cur = false;
  } else {
    throw InputError("--r-writes must be every-step or reselect");
  }
  c.initial_p_mem.assign(n, ProcessStatus::kBottom);
  if (o.participating.empty()) {
    c.initial_p_mem.assign(n, ProcessStatus::kInitial);
  }
  for (int p : o.participating) {
    if (p < 1 || p > n) throw InputError("--participating names process " + std::to_string(p));
    c.initial_p_mem[p - 1] = ProcessStatus::kInitial;
  }
  c.output_after.assign(n, std::nullopt);
  for (auto [p, k] : ParsePairs(o.output_pattern, "--outputs")) {
    if (p < 1 || p > n) throw InputError("--outputs names process " + std::to_string(p));
    c.output_after[p - 1] = k;
  }
  c.halt_after.assign(sims, std::nullopt);
  for (auto [s, h] : ParsePairs(o.halt_pattern, "--halt")) {
    if (s < 1 || s > sims) {
      throw InputError("--halt names simulator " + std::to_string(s) + " outside 1.." +
                       std::to_string(sims));
    }
    c.halt_after[s - 1] = h;
  }

  BggRun run = RunBggSelection(a, alpha, c);
  const std::vector<LemmaVerdict> lemmas = CheckSelectionLemmas(run);
  int failed = 0, inconclusive = 0;
  Json verdicts = Json::array();
  for (const LemmaVerdict& v : lemmas) {
    failed += v.status == LemmaStatus::kFail;
    inconclusive += v.status == LemmaStatus::kInconclusive;
    verdicts.push_back(LemmaVerdictToJson(v));
  }
  if (failed > 0 || !o.out.empty()) {
    const fs::path dir = o.out.empty() ? fs::path(kDefaultOut) : fs::path(o.out);
    WriteJsonFile(dir / "history.json", BggHistoryToJson(run));
    WriteJsonFile(dir / "lemmas.json", verdicts);
  }
  if (IsJson(o)) {
    Json j = Json::object();
    j["gate"] = GatePolarityName(c.options.gate);
    j["publish_p_cur"] = c.options.publish_p_cur;
    j["rounds"] = c.rounds;
    j["simulators"] = sims;
    j["lemmas"] = verdicts;
    j["warnings"] = inconclusive;
    Print(j);
  } else {
    std::cout << "gate=" << GatePolarityName(c.options.gate)
              << " r_writes=" << o.r_writes << " rounds=" << c.rounds
              << " simulators=" << sims << '\n';
    for (const LemmaVerdict& v : lemmas) {
      std::cout << v.lemma << '=' << LemmaStatusName(v.status);
      if (!v.detail.empty()) std::cout << " (" << v.detail << ')';
      std::cout << '\n';
    }
    if (inconclusive > 0) std::cout << "warnings=" << inconclusive << '\n';
  }
  return failed > 0 ? kExitViolation : kExitOk;
}

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "Output directory");
}

void AddModel(CLI::App* cmd, Options& o) {
  cmd->add_option("--adversary", o.adversary, "Adversary file");
  cmd->add_option("--alpha", o.alpha, "Agreement function file");
  cmd->add_option("--model", o.model, "wf, tres:T or kconc:K (with --n)");
  cmd->add_option("--n", o.n, "Number of processes");
  cmd->add_option("--protocol", o.protocol,
                  "echo, safe-agreement, alpha-setcons, adaptive, cons23")
      ->required();
  cmd->add_option("--subroutine", o.subroutine,
                  "Agreement subroutine of adaptive: safe-agreement or oracle");
  cmd->add_option("--inputs", o.inputs, "Inputs, one per process")->delimiter(',');
  cmd->add_option("--completion", o.completion,
                  "Round-robin passes appended for correct processes");
}

}  // namespace
}  // namespace advlab

int main(int argc, char** argv) {
  using namespace advlab;
  Options o;
  CLI::App app{"advlab: adversaries, agreement functions and set-consensus runs"};
  app.require_subcommand(1);

  auto* setcon = app.add_subcommand("setcon", "Set consensus power of an adversary");
  setcon->add_option("--adversary", o.adversary, "Adversary file")->required();
  AddCommon(setcon, o);

  auto* classify = app.add_subcommand("classify", "Superset-closed, symmetric, fair");
  classify->add_option("--adversary", o.adversary, "Adversary file")->required();
  AddCommon(classify, o);

  auto* alpha = app.add_subcommand("alpha", "Agreement function of an adversary");
  alpha->add_option("--adversary", o.adversary, "Adversary file")->required();
  AddCommon(alpha, o);

  auto* compare = app.add_subcommand("compare", "Pointwise order of two alpha tables");
  compare->add_option("--alpha", o.alpha, "Agreement function file")->required();
  compare->add_option("--other", o.other, "Agreement function file")->required();
  AddCommon(compare, o);

  auto* simulate = app.add_subcommand("simulate", "Seeded simulation campaign");
  AddModel(simulate, o);
  AddCommon(simulate, o);
  simulate->add_option("--seed", o.seed, "First seed");
  simulate->add_option("--seeds", o.seeds, "Number of seeds");
  simulate->add_option("--budget", o.budget, "Schedule length before completion");
  simulate->add_flag("--traces", o.all_traces, "Write every trace under --out");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive small-schedule campaign");
  AddModel(enumerate, o);
  AddCommon(enumerate, o);
  enumerate->add_option("--steps", o.steps, "Steps per process");
  enumerate->add_option("--halts", o.halts, "Maximum halted processes");
  enumerate->add_flag("--count", o.count_only, "Only count the schedules");

  auto* check = app.add_subcommand("check", "Check a recorded trace");
  check->add_option("--trace", o.trace, "Trace file")->required();
  check->add_option("--alpha", o.alpha, "Agreement function file");
  check->add_option("--k", o.k, "k for k-set agreement");
  AddCommon(check, o);

  auto* bgg = app.add_subcommand("bgg", "Live-set selection run and lemma checks");
  bgg->add_option("--adversary", o.adversary, "Adversary file")->required();
  bgg->add_option("--budget", o.budget, "Rounds");
  bgg->add_option("--gate", o.gate, "verbatim or inverted");
  bgg->add_option("--r-writes", o.r_writes, "every-step or reselect");
  bgg->add_option("--participating", o.participating, "Started processes")
      ->delimiter(',');
  bgg->add_option("--outputs", o.output_pattern,
                  "P:K pairs: process P outputs after K simulated steps");
  bgg->add_option("--halt", o.halt_pattern, "S:R pairs: simulator S halts after round R");
  AddCommon(bgg, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*setcon) return CmdSetcon(o);
    if (*classify) return CmdClassify(o);
    if (*alpha) return CmdAlpha(o);
    if (*compare) return CmdCompare(o);
    if (*simulate) return CmdSimulate(o);
    if (*enumerate) return CmdEnumerate(o);
    if (*check) return CmdCheck(o);
    if (*bgg) return CmdBgg(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SelectionImpossible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
