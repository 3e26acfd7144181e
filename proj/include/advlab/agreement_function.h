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

#ifndef ADVLAB_AGREEMENT_FUNCTION_H_
#define ADVLAB_AGREEMENT_FUNCTION_H_

#include <vector>

#include "advlab/process_set.h"
#include "advlab/trace.h"

namespace advlab {

// A total map from subsets of {p_1..p_n} to {0..n}, stored densely and
// indexed by bit-set encoding. Construction only range-checks; use
// IsMonotonic to validate the shape of an arbitrary table.
class AgreementFunction {
 public:
  // Throws InputError unless table.size() == 2^n and every value is in 0..n.
  AgreementFunction(int n, std::vector<int> table);

  int n() const { return n_; }
  int operator()(const ProcessSet& p) const;
  int at(std::uint32_t bits) const { return table_.at(bits); }
  const std::vector<int>& table() const { return table_; }

  friend bool operator==(const AgreementFunction&,
                         const AgreementFunction&) = default;

 private:
  int n_;
  std::vector<int> table_;
};

// P -> |P|
AgreementFunction MakeWaitFree(int n);
// P -> max(0, |P| - n + t + 1), 0 <= t < n
AgreementFunction MakeTResilient(int n, int t);
// P -> min(|P|, k), 1 <= k <= n
AgreementFunction MakeKConcurrent(int n, int k);

// alpha(empty) = 0 and P subset of P' implies alpha(P) <= alpha(P') <= |P'|.
bool IsMonotonic(const AgreementFunction& alpha);

enum class Comparison { kLe, kGe, kEq, kIncomparable };
const char* ComparisonName(Comparison c);

// Pointwise partial order. Throws InputError on mismatched universes.
Comparison ComparePointwise(const AgreementFunction& a,
                            const AgreementFunction& b);

// Finite-trace reading of the alpha-model: with P the participating set,
// alpha(P) >= 1 and at most alpha(P) - 1 participants halted undecided.
// Throws InputError if the trace universe differs from alpha's.
bool AdmitsTrace(const AgreementFunction& alpha, const RunTrace& trace);

// Same predicate on a bare schedule (every halted participant counts).
bool AdmitsSchedule(const AgreementFunction& alpha, const Schedule& schedule);

}  // namespace advlab

#endif  // ADVLAB_AGREEMENT_FUNCTION_H_
