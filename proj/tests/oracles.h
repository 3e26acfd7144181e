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

// Reference implementations used as test oracles. They work on plain
// std::set families and never touch the library's bit-set code paths.

#ifndef ADVLAB_TESTS_ORACLES_H_
#define ADVLAB_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "advlab/adversary.h"

namespace advlab::oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Family FamilyOf(const Adversary& a) {
  Family f;
  for (const ProcessSet& s : a.live_sets()) {
    const std::vector<ProcessId> m = s.members();
    f.insert(Set(m.begin(), m.end()));
  }
  return f;
}

inline Set SetOf(const ProcessSet& s) {
  const std::vector<ProcessId> m = s.members();
  return Set(m.begin(), m.end());
}

inline bool Includes(const Set& outer, const Set& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

inline bool Meets(const Set& a, const Set& b) {
  for (int x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

// A|_P
inline Family Within(const Family& f, const Set& p) {
  Family out;
  for (const Set& s : f) {
    if (Includes(p, s)) out.insert(s);
  }
  return out;
}

// A|_{P,Q}
inline Family WithinMeeting(const Family& f, const Set& p, const Set& q) {
  Family out;
  for (const Set& s : Within(f, p)) {
    if (Meets(s, q)) out.insert(s);
  }
  return out;
}

// The max-min recursion, with no memoization.
inline int NaiveSetcon(const Family& f) {
  if (f.empty()) return 0;
  int best = 0;
  for (const Set& s : f) {
    int worst = 1 << 20;
    for (int a : s) {
      Set rest = s;
      rest.erase(a);
      worst = std::min(worst, NaiveSetcon(Within(f, rest)) + 1);
    }
    best = std::max(best, worst);
  }
  return best;
}

// Smallest set meeting every member, by trying all subsets of {1..n}.
inline int BruteCsize(const Family& f, int n) {
  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Set h;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) h.insert(i + 1);
    }
    bool hits = true;
    for (const Set& s : f) hits = hits && Meets(s, h);
    if (hits) best = std::min(best, static_cast<int>(h.size()));
  }
  return best;
}

inline int DistinctSizes(const Family& f) {
  std::set<std::size_t> sizes;
  for (const Set& s : f) sizes.insert(s.size());
  return static_cast<int>(sizes.size());
}

inline std::vector<Set> AllSubsets(int n) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Set s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.insert(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

// Definition of fairness, evaluated literally.
inline bool NaiveFair(const Family& f, int n) {
  for (const Set& p : AllSubsets(n)) {
    const int whole = NaiveSetcon(Within(f, p));
    for (const Set& q : AllSubsets(n)) {
      if (q.empty() || !Includes(p, q)) continue;
      const int bound = std::min(static_cast<int>(q.size()), whole);
      if (NaiveSetcon(WithinMeeting(f, p, q)) != bound) return false;
    }
  }
  return true;
}

// Multinomial coefficient (sum k_i)! / prod k_i!.
inline std::uint64_t Multinomial(const std::vector<int>& counts) {
  std::uint64_t result = 1;
  int total = 0;
  for (int k : counts) {
    for (int i = 1; i <= k; ++i) {
      ++total;
      result = result * total / i;
    }
  }
  return result;
}

}  // namespace advlab::oracle

#endif  // ADVLAB_TESTS_ORACLES_H_
