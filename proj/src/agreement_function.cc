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

#include "advlab/agreement_function.h"

#include <algorithm>
#include <bit>

namespace advlab {

AgreementFunction::AgreementFunction(int n, std::vector<int> table)
    : n_(n), table_(std::move(table)) {
  CheckUniverseSize(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw InputError("agreement function table must have 2^" +
                     std::to_string(n) + " entries, got " +
                     std::to_string(table_.size()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 0 || table_[i] > n) {
      throw InputError("agreement function value " + std::to_string(table_[i]) +
                       " at index " + std::to_string(i) + " outside 0.." +
                       std::to_string(n));
    }
  }
  if (table_[0] != 0) throw InputError("agreement function must map the empty set to 0");
}

int AgreementFunction::operator()(const ProcessSet& p) const {
  if (p.n() != n_) throw InputError("set and agreement function universes differ");
  return table_[p.bits()];
}

namespace {

template <class Formula>
AgreementFunction Tabulate(int n, Formula&& f) {
  CheckUniverseSize(n);
  std::vector<int> table(std::size_t{1} << n);
  for (std::uint32_t p = 0; p < table.size(); ++p) table[p] = f(std::popcount(p));
  return AgreementFunction(n, std::move(table));
}

}  // namespace

AgreementFunction MakeWaitFree(int n) {
  return Tabulate(n, [](int size) { return size; });
}

AgreementFunction MakeTResilient(int n, int t) {
  CheckUniverseSize(n);
  if (t < 0 || t >= n) {
    throw InputError("t-resilience needs 0 <= t < n, got t=" + std::to_string(t));
  }
  return Tabulate(n, [n, t](int size) { return std::max(0, size - n + t + 1); });
}

AgreementFunction MakeKConcurrent(int n, int k) {
  CheckUniverseSize(n);
  if (k < 1 || k > n) {
    throw InputError("k-concurrency needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  return Tabulate(n, [k](int size) { return std::min(size, k); });
}

bool IsMonotonic(const AgreementFunction& alpha) {
  const auto& t = alpha.table();
  if (t[0] != 0) return false;
  for (std::uint32_t p = 0; p < t.size(); ++p) {
    if (t[p] > std::popcount(p)) return false;
    // Checking single-element extensions covers every pair P subset of P'.
    for (int i = 0; i < alpha.n(); ++i) {
      const std::uint32_t bigger = p | (1u << i);
      if (bigger != p && t[p] > t[bigger]) return false;
    }
  }
  return true;
}

const char* ComparisonName(Comparison c) {
  switch (c) {
    case Comparison::kLe: return "LE";
    case Comparison::kGe: return "GE";
    case Comparison::kEq: return "EQ";
    case Comparison::kIncomparable: return "INCOMPARABLE";
  }
  return "?";
}

Comparison ComparePointwise(const AgreementFunction& a,
                            const AgreementFunction& b) {
  if (a.n() != b.n()) {
    throw InputError("cannot compare agreement functions over n=" +
                     std::to_string(a.n()) + " and n=" + std::to_string(b.n()));
  }
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < a.table().size(); ++i) {
    some_less |= a.table()[i] < b.table()[i];
    some_greater |= a.table()[i] > b.table()[i];
  }
  if (some_less && some_greater) return Comparison::kIncomparable;
  if (some_less) return Comparison::kLe;
  if (some_greater) return Comparison::kGe;
  return Comparison::kEq;
}

namespace {

bool Admits(const AgreementFunction& alpha, const ProcessSet& participating,
            int faulty) {
  const int level = alpha(participating);
  return level >= 1 && faulty <= level - 1;
}

}  // namespace

bool AdmitsTrace(const AgreementFunction& alpha, const RunTrace& trace) {
  if (trace.n() != alpha.n()) {
    throw InputError("trace universe n=" + std::to_string(trace.n()) +
                     " differs from agreement function n=" +
                     std::to_string(alpha.n()));
  }
  return Admits(alpha, trace.participating, trace.HaltedUndecided().size());
}

bool AdmitsSchedule(const AgreementFunction& alpha, const Schedule& schedule) {
  if (schedule.n != alpha.n()) {
    throw InputError("schedule universe differs from agreement function");
  }
  return Admits(alpha, schedule.participating(), schedule.halted().size());
}

}  // namespace advlab
