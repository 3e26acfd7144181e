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

#ifndef ADVLAB_PROCESS_SET_H_
#define ADVLAB_PROCESS_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "advlab/errors.h"

namespace advlab {

inline constexpr int kMaxProcesses = 16;

// Process ids are 1-based throughout the public API: process p_i has id i and
// occupies bit i-1 of the encoding.
using ProcessId = int;

// A subset of the universe {p_1, ..., p_n}, n <= 16, stored as a bit-set.
// Binary set operations require both operands to share the same n.
class ProcessSet {
 public:
  ProcessSet() = default;

  // Throws InputError if n is out of range or bits has a position >= n.
  ProcessSet(int n, std::uint32_t bits);

  static ProcessSet Empty(int n) { return ProcessSet(n, 0); }
  static ProcessSet Full(int n);
  static ProcessSet Of(int n, std::initializer_list<ProcessId> members);
  static ProcessSet Of(int n, const std::vector<ProcessId>& members);

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(ProcessId p) const {
    return p >= 1 && p <= n_ && ((bits_ >> (p - 1)) & 1u) != 0;
  }
  bool subset_of(const ProcessSet& other) const;
  bool intersects(const ProcessSet& other) const;

  ProcessSet with(ProcessId p) const;
  ProcessSet without(ProcessId p) const;
  ProcessSet operator|(const ProcessSet& other) const;
  ProcessSet operator&(const ProcessSet& other) const;
  ProcessSet operator-(const ProcessSet& other) const;

  // Smallest member id; 0 when empty.
  ProcessId first() const;
  // Cyclic successor of p among members in ascending id order; 0 when empty.
  ProcessId next_after(ProcessId p) const;

  std::vector<ProcessId> members() const;
  // "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const ProcessSet& a, const ProcessSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  // Orders by encoding; only meaningful within one universe.
  friend bool operator<(const ProcessSet& a, const ProcessSet& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
  }

 private:
  void require_same_universe(const ProcessSet& other) const;

  int n_ = 0;
  std::uint32_t bits_ = 0;
};

void CheckUniverseSize(int n);

// Calls fn(ProcessSet) for every subset of the n-process universe, in
// ascending encoding order (so the empty set first).
template <class Fn>
void ForEachSubset(int n, Fn&& fn) {
  CheckUniverseSize(n);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) fn(ProcessSet(n, bits));
}

// Calls fn(ProcessSet) for every subset of `of`, ascending encoding order.
template <class Fn>
void ForEachSubsetOf(const ProcessSet& of, Fn&& fn) {
  const std::uint32_t mask = of.bits();
  std::uint32_t sub = 0;
  while (true) {
    fn(ProcessSet(of.n(), sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace advlab

#endif  // ADVLAB_PROCESS_SET_H_
