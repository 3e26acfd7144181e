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

#ifndef ADVLAB_IO_H_
#define ADVLAB_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "advlab/adversary.h"
#include "advlab/agreement_function.h"
#include "advlab/bgg.h"
#include "advlab/checkers.h"
#include "advlab/trace.h"

namespace advlab {

using Json = nlohmann::ordered_json;

// All parsers throw InputError with a message naming the offending field.

// {"n":3,"live_sets":[[1],[2,3],[1,2,3]]}; live sets in encoding order.
Json AdversaryToJson(const Adversary& adversary);
Adversary AdversaryFromJson(const Json& j);

// {"n":3,"table":[...]} indexed by bit-set encoding.
Json AlphaToJson(const AgreementFunction& alpha);
AgreementFunction AlphaFromJson(const Json& j);

Json ProcessSetToJson(const ProcessSet& s);
ProcessSet ProcessSetFromJson(int n, const Json& j);

Json ScheduleToJson(const Schedule& schedule);
Schedule ScheduleFromJson(const Json& j);

Json TraceToJson(const RunTrace& trace);
RunTrace TraceFromJson(const Json& j);

Json VerdictToJson(const Verdict& verdict);
Json LemmaVerdictToJson(const LemmaVerdict& verdict);

// Header (gate polarity, R publication, rounds, pattern) plus per-round
// records.
Json BggHistoryToJson(const BggRun& run);

Json ParseJson(std::string_view text);
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& j);

}  // namespace advlab

#endif  // ADVLAB_IO_H_
