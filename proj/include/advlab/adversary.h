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

#ifndef ADVLAB_ADVERSARY_H_
#define ADVLAB_ADVERSARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "advlab/agreement_function.h"
#include "advlab/process_set.h"

namespace advlab {

// A finite collection of non-empty live sets over {p_1, ..., p_n}. Live sets
// are kept sorted by bit-set encoding, which is also the canonical file order.
class Adversary {
 public:
  // Throws InputError on empty live sets, duplicates, or universe mismatch.
  Adversary(int n, std::vector<ProcessSet> live_sets);

  static Adversary Empty(int n) { return Adversary(n, {}); }
  // Skips validation of ordering; bits must already be sorted and distinct.
  static Adversary FromSortedBits(int n, std::vector<std::uint32_t> bits);

  int n() const { return n_; }
  bool empty() const { return bits_.empty(); }
  std::size_t size() const { return bits_.size(); }
  std::vector<ProcessSet> live_sets() const;
  // Sorted live-set encodings.
  const std::vector<std::uint32_t>& bits() const { return bits_; }
  bool contains(const ProcessSet& s) const;
  ProcessSet universe() const { return ProcessSet::Full(n_); }

  // "{{1},{2,3},{1,2,3}}"
  std::string to_string() const;

  friend bool operator==(const Adversary& a, const Adversary& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  Adversary() = default;

  int n_ = 0;
  std::vector<std::uint32_t> bits_;
};

// A|_P: live sets contained in P.
Adversary Restrict(const Adversary& adversary, const ProcessSet& p);

// A|_{P,Q}: live sets contained in P that meet Q. Requires Q to be a subset of
// P.
Adversary RestrictIntersecting(const Adversary& adversary, const ProcessSet& p,
                               const ProcessSet& q);

// Memo table for the set consensus power recursion. Keys are canonical
// (sorted) live-set collections, so every restriction that produces the same
// collection shares one entry. Not synchronized; give each thread its own.
class SetconCache {
 public:
  int Setcon(const Adversary& adversary);
  // setcon of the collection given by sorted encodings.
  int Setcon(const std::vector<std::uint32_t>& sorted_bits);

  // setcon(A|_P) and setcon(A|_{P,Q}) without materializing an Adversary.
  int Restricted(const Adversary& adversary, std::uint32_t p);
  int RestrictedIntersecting(const Adversary& adversary, std::uint32_t p,
                             std::uint32_t q);

  std::size_t entries() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const;
  };
  std::unordered_map<std::vector<std::uint32_t>, int, KeyHash> memo_;
};

int Setcon(const Adversary& adversary);

struct SetconStep {
  ProcessSet live_set;
  ProcessId removed = 0;
};

// The max-min chain realizing setcon: at each level the chosen live set is an
// arg-max and `removed` an arg-min; ties go to the smallest encoding. The next
// level works on the restriction to live_set minus removed.
struct SetconWitness {
  int value = 0;
  std::vector<SetconStep> chain;
};

SetconWitness ComputeSetconWitness(const Adversary& adversary);

// Replays the chain from scratch and checks every step against the recursion.
// Returns the replayed value, or nullopt if the chain is inconsistent.
std::optional<int> ReplaySetconWitness(const Adversary& adversary,
                                       const SetconWitness& witness);

// Minimum hitting set size. Throws InputError for the empty adversary.
int Csize(const Adversary& adversary);

bool IsSupersetClosed(const Adversary& adversary);
bool IsSymmetric(const Adversary& adversary);

// Number of distinct live-set cardinalities. Throws InputError unless the
// adversary is symmetric.
int SymmetricSetcon(const Adversary& adversary);

struct FairnessViolation {
  ProcessSet participating;  // P
  ProcessSet subset;         // Q, never empty
  int restricted_setcon = 0;  // setcon(A|_{P,Q})
  int bound = 0;              // min(|Q|, setcon(A|_P))
};

// First (P, Q) breaking setcon(A|_{P,Q}) = min(|Q|, setcon(A|_P)). P is
// scanned from the largest encoding down, Q upward over non-empty subsets.
std::optional<FairnessViolation> FindFairnessViolation(
    const Adversary& adversary);
bool IsFair(const Adversary& adversary);

// alpha_A(P) = setcon(A|_P) for every P.
AgreementFunction AgreementFunctionOf(const Adversary& adversary);

// Family generators for exhaustive sweeps.
// Every collection of non-empty subsets (n <= 4: 2^(2^n - 1) adversaries).
std::vector<Adversary> AllAdversaries(int n);
Adversary SupersetClosure(const Adversary& adversary);
// Live sets are all subsets whose size bit is set in size_mask (bit k-1 for
// size k).
Adversary SymmetricAdversary(int n, std::uint32_t size_mask);
std::vector<Adversary> SupersetClosedAdversaries(int n);
std::vector<Adversary> SymmetricAdversaries(int n);

// Named families.
Adversary WaitFreeAdversary(int n);
Adversary TResilientAdversary(int n, int t);

}  // namespace advlab

#endif  // ADVLAB_ADVERSARY_H_
