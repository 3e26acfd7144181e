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

#ifndef ADVLAB_CHECKERS_H_
#define ADVLAB_CHECKERS_H_

#include <optional>
#include <string>
#include <vector>

#include "advlab/agreement_function.h"
#include "advlab/trace.h"

namespace advlab {

// The event that violates a property. `step` is the schedule index; for
// termination it is the last index of the trace.
struct Witness {
  std::size_t step = 0;
  ProcessId process = 0;
  std::optional<Value> value;
  std::string detail;
};

struct Verdict {
  std::string property;
  bool pass = true;
  std::optional<Witness> witness;  // present iff !pass
};

// Every decision is the input of some participant. inputs is indexed p-1.
Verdict CheckValidity(const RunTrace& trace, const std::vector<Value>& inputs);

// At each decision, the number of distinct values decided so far is at most
// alpha of the participating set at that step.
Verdict CheckAlphaAgreement(const RunTrace& trace, const AgreementFunction& alpha);

// Every correct participant decided. With `scope`, only its members are
// required to decide.
Verdict CheckTermination(const RunTrace& trace);
Verdict CheckTermination(const RunTrace& trace, const ProcessSet& scope);

// At most k distinct decisions overall, plus validity against trace.inputs.
Verdict CheckKAgreement(const RunTrace& trace, int k);

// Adaptive set consensus: with l the smallest level at which some process
// returned (its last write to `reg` before deciding), every decided value was
// written at level l. Needs recorded events; throws InputError otherwise.
Verdict CheckLevelLock(const RunTrace& trace, const std::string& reg);

}  // namespace advlab

#endif  // ADVLAB_CHECKERS_H_
