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

#include "advlab/io.h"

#include <fstream>
#include <sstream>

#include "advlab/errors.h"

namespace advlab {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t Int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& Array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

int ReadN(const Json& j) {
  const std::int64_t n = Int(Field(j, "n"), "'n'");
  if (n < 1 || n > kMaxProcesses) {
    throw InputError("'n' must be in 1.." + std::to_string(kMaxProcesses));
  }
  return static_cast<int>(n);
}

ProcessId ReadProcess(int n, const Json& j, const std::string& what) {
  const std::int64_t p = Int(j, what);
  if (p < 1 || p > n) {
    throw InputError(what + " " + std::to_string(p) + " outside 1.." +
                     std::to_string(n));
  }
  return static_cast<ProcessId>(p);
}

Json ViewToJson(const std::vector<std::optional<Cell>>& view) {
  Json out = Json::array();
  for (const auto& c : view) {
    if (c) {
      out.push_back(CellToText(*c));
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

Json EntriesToJson(const std::vector<SelectionEntry>& r) {
  Json out = Json::array();
  for (const SelectionEntry& e : r) {
    Json slot = Json::object();
    slot["process"] = e.process == 0 ? Json(nullptr) : Json(e.process);
    slot["live_set"] = ProcessSetToJson(e.live_set);
    out.push_back(std::move(slot));
  }
  return out;
}

const char* StatusName(ProcessStatus s) {
  switch (s) {
    case ProcessStatus::kBottom: return "bottom";
    case ProcessStatus::kInitial: return "initial";
    case ProcessStatus::kTop: return "top";
  }
  return "?";
}

}  // namespace

Json ProcessSetToJson(const ProcessSet& s) {
  Json out = Json::array();
  for (ProcessId p : s.members()) out.push_back(p);
  return out;
}

ProcessSet ProcessSetFromJson(int n, const Json& j) {
  std::uint32_t bits = 0;
  for (const Json& e : Array(j, "process set")) {
    const ProcessId p = ReadProcess(n, e, "process");
    if (bits & (1u << (p - 1))) {
      throw InputError("duplicate process " + std::to_string(p) + " in set");
    }
    bits |= 1u << (p - 1);
  }
  return ProcessSet(n, bits);
}

Json AdversaryToJson(const Adversary& adversary) {
  Json out = Json::object();
  out["n"] = adversary.n();
  Json sets = Json::array();
  for (const ProcessSet& l : adversary.live_sets()) {
    sets.push_back(ProcessSetToJson(l));
  }
  out["live_sets"] = std::move(sets);
  return out;
}

Adversary AdversaryFromJson(const Json& j) {
  const int n = ReadN(j);
  std::vector<ProcessSet> sets;
  for (const Json& inner : Array(Field(j, "live_sets"), "'live_sets'")) {
    Array(inner, "live set");
    if (inner.empty()) throw InputError("empty live set");
    std::uint32_t bits = 0;
    ProcessId prev = 0;
    for (const Json& e : inner) {
      const ProcessId p = ReadProcess(n, e, "live set member");
      if (p <= prev) throw InputError("live set members must be strictly ascending");
      prev = p;
      bits |= 1u << (p - 1);
    }
    sets.emplace_back(n, bits);
  }
  return Adversary(n, std::move(sets));
}

Json AlphaToJson(const AgreementFunction& alpha) {
  Json out = Json::object();
  out["n"] = alpha.n();
  out["table"] = alpha.table();
  return out;
}

AgreementFunction AlphaFromJson(const Json& j) {
  const int n = ReadN(j);
  std::vector<int> table;
  for (const Json& v : Array(Field(j, "table"), "'table'")) {
    table.push_back(static_cast<int>(Int(v, "table entry")));
  }
  return AgreementFunction(n, std::move(table));
}

Json ScheduleToJson(const Schedule& schedule) {
  Json out = Json::object();
  out["n"] = schedule.n;
  out["steps"] = schedule.steps;
  Json halted = Json::object();
  for (int p = 1; p <= schedule.n; ++p) {
    if (schedule.halted_at[p - 1]) {
      halted[std::to_string(p)] = *schedule.halted_at[p - 1];
    }
  }
  out["halted_at"] = std::move(halted);
  out["correct_set"] = ProcessSetToJson(schedule.correct_set);
  return out;
}

Schedule ScheduleFromJson(const Json& j) {
  Schedule s;
  s.n = ReadN(j);
  for (const Json& e : Array(Field(j, "steps"), "'steps'")) {
    s.steps.push_back(ReadProcess(s.n, e, "step"));
  }
  s.halted_at.assign(s.n, std::nullopt);
  const Json& halted = Field(j, "halted_at");
  if (!halted.is_object()) throw InputError("'halted_at' must be an object");
  for (const auto& [key, value] : halted.items()) {
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("'halted_at' key '" + key + "' is not a process id");
    }
    if (p < 1 || p > s.n) throw InputError("'halted_at' names process " + key);
    const std::int64_t at = Int(value, "'halted_at' entry");
    if (at < 0) throw InputError("'halted_at' entry must be non-negative");
    s.halted_at[p - 1] = static_cast<std::size_t>(at);
  }
  s.correct_set = ProcessSetFromJson(s.n, Field(j, "correct_set"));
  s.Validate();
  return s;
}

Json TraceToJson(const RunTrace& trace) {
  Json out = Json::object();
  out["protocol"] = trace.protocol;
  out["schedule"] = ScheduleToJson(trace.schedule);
  out["inputs"] = trace.inputs;
  Json events = Json::array();
  for (const Event& e : trace.events) {
    Json ev = Json::object();
    ev["step"] = e.step;
    ev["process"] = e.process;
    if (e.kind == EventKind::kUpdate) {
      ev["kind"] = "update";
      ev["written"] = CellToText(e.written);
    } else {
      ev["kind"] = "snapshot";
      ev["view"] = ViewToJson(e.view);
    }
    events.push_back(std::move(ev));
  }
  out["events"] = std::move(events);
  Json decisions = Json::array();
  for (const Decision& d : trace.decisions) {
    Json dj = Json::object();
    dj["step"] = d.step;
    dj["process"] = d.process;
    dj["value"] = d.value;
    decisions.push_back(std::move(dj));
  }
  out["decisions"] = std::move(decisions);
  out["participating"] = ProcessSetToJson(trace.participating);
  Json terminal = Json::array();
  for (Terminal t : trace.terminal) terminal.push_back(TerminalName(t));
  out["terminal"] = std::move(terminal);
  out["blocked"] = ProcessSetToJson(trace.blocked);
  return out;
}

RunTrace TraceFromJson(const Json& j) {
  RunTrace t;
  const Json& protocol = Field(j, "protocol");
  if (!protocol.is_string()) throw InputError("'protocol' must be a string");
  t.protocol = protocol.get<std::string>();
  t.schedule = ScheduleFromJson(Field(j, "schedule"));
  const int n = t.schedule.n;
  for (const Json& v : Array(Field(j, "inputs"), "'inputs'")) {
    t.inputs.push_back(Int(v, "input"));
  }
  for (const Json& ej : Array(Field(j, "events"), "'events'")) {
    Event e;
    e.step = static_cast<std::size_t>(Int(Field(ej, "step"), "event step"));
    e.process = ReadProcess(n, Field(ej, "process"), "event process");
    const Json& kind = Field(ej, "kind");
    if (kind == "update") {
      e.kind = EventKind::kUpdate;
      const Json& w = Field(ej, "written");
      if (!w.is_string()) throw InputError("'written' must be a string");
      e.written = CellFromText(w.get<std::string>());
    } else if (kind == "snapshot") {
      e.kind = EventKind::kSnapshot;
      for (const Json& c : Array(Field(ej, "view"), "'view'")) {
        if (c.is_null()) {
          e.view.emplace_back(std::nullopt);
        } else if (c.is_string()) {
          e.view.emplace_back(CellFromText(c.get<std::string>()));
        } else {
          throw InputError("view cells must be strings or null");
        }
      }
    } else {
      throw InputError("event kind must be 'update' or 'snapshot'");
    }
    t.events.push_back(std::move(e));
  }
  for (const Json& dj : Array(Field(j, "decisions"), "'decisions'")) {
    Decision d;
    d.step = static_cast<std::size_t>(Int(Field(dj, "step"), "decision step"));
    d.process = ReadProcess(n, Field(dj, "process"), "decision process");
    d.value = Int(Field(dj, "value"), "decision value");
    t.decisions.push_back(d);
  }
  t.participating = ProcessSetFromJson(n, Field(j, "participating"));
  for (const Json& tj : Array(Field(j, "terminal"), "'terminal'")) {
    if (tj == TerminalName(Terminal::kRunning)) {
      t.terminal.push_back(Terminal::kRunning);
    } else if (tj == TerminalName(Terminal::kHalted)) {
      t.terminal.push_back(Terminal::kHalted);
    } else if (tj == TerminalName(Terminal::kAbsent)) {
      t.terminal.push_back(Terminal::kAbsent);
    } else {
      throw InputError("unknown terminal flag " + tj.dump());
    }
  }
  auto blocked = j.find("blocked");
  t.blocked = blocked == j.end() ? ProcessSet::Empty(n)
                                 : ProcessSetFromJson(n, *blocked);
  t.Validate();
  return t;
}

Json VerdictToJson(const Verdict& verdict) {
  Json out = Json::object();
  out["property"] = verdict.property;
  out["pass"] = verdict.pass;
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    Json wj = Json::object();
    wj["step"] = w.step;
    wj["process"] = w.process;
    wj["value"] = w.value ? Json(*w.value) : Json(nullptr);
    wj["detail"] = w.detail;
    out["witness"] = std::move(wj);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json LemmaVerdictToJson(const LemmaVerdict& verdict) {
  Json out = Json::object();
  out["lemma"] = verdict.lemma;
  out["status"] = LemmaStatusName(verdict.status);
  out["detail"] = verdict.detail;
  return out;
}

Json BggHistoryToJson(const BggRun& run) {
  Json out = Json::object();
  Json header = Json::object();
  header["adversary"] = AdversaryToJson(run.adversary);
  header["simulators"] = run.final_state.r.size();
  header["gate"] = GatePolarityName(run.config.options.gate);
  header["publish_p_cur"] = run.config.options.publish_p_cur;
  header["rounds"] = run.config.rounds;
  Json pmem = Json::array();
  for (ProcessStatus s : run.config.initial_p_mem) pmem.push_back(StatusName(s));
  header["initial_p_mem"] = std::move(pmem);
  Json halts = Json::array();
  for (const auto& h : run.config.halt_after) {
    halts.push_back(h ? Json(*h) : Json(nullptr));
  }
  header["halt_after"] = std::move(halts);
  Json outs = Json::array();
  for (const auto& o : run.config.output_after) {
    outs.push_back(o ? Json(*o) : Json(nullptr));
  }
  header["output_after"] = std::move(outs);
  out["header"] = std::move(header);

  Json rounds = Json::array();
  for (const RoundRecord& r : run.history) {
    Json rj = Json::object();
    rj["round"] = r.round;
    rj["simulator"] = r.simulator;
    rj["P"] = ProcessSetToJson(r.participating);
    rj["A"] = ProcessSetToJson(r.active);
    rj["W"] = ProcessSetToJson(r.window);
    rj["S_cur"] = ProcessSetToJson(r.s_cur);
    rj["p_cur"] = r.p_cur == 0 ? Json(nullptr) : Json(r.p_cur);
    rj["branch"] = BranchName(r.branch);
    rj["step_result"] = RoundOutcomeName(r.outcome);
    rj["R"] = EntriesToJson(r.r_before);
    rounds.push_back(std::move(rj));
  }
  out["history"] = std::move(rounds);
  Json final_state = Json::object();
  final_state["R"] = EntriesToJson(run.final_state.r);
  Json pm = Json::array();
  for (ProcessStatus s : run.final_state.p_mem) pm.push_back(StatusName(s));
  final_state["P_MEM"] = std::move(pm);
  out["final"] = std::move(final_state);
  return out;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseJson(buf.str());
}

void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace advlab
