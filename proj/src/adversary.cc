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

#include "advlab/adversary.h"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace advlab {
namespace {

bool SubsetBits(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

std::vector<std::uint32_t> FilterSubsets(const std::vector<std::uint32_t>& sets,
                                         std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : sets) {
    if (SubsetBits(s, p)) out.push_back(s);
  }
  return out;
}

std::vector<std::uint32_t> FilterIntersecting(
    const std::vector<std::uint32_t>& sets, std::uint32_t p, std::uint32_t q) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : sets) {
    if (SubsetBits(s, p) && (s & q) != 0) out.push_back(s);
  }
  return out;
}

// One level of the max-min recursion with smallest-encoding tie-breaks.
struct MaxMin {
  int value = 0;
  std::uint32_t live_set = 0;
  int removed_bit = -1;
};

MaxMin EvaluateLevel(SetconCache& cache, const std::vector<std::uint32_t>& sets) {
  MaxMin best;
  bool have = false;
  for (std::uint32_t s : sets) {
    int inner = -1;
    int inner_bit = -1;
    for (std::uint32_t b = s; b != 0; b &= b - 1) {
      const int bit = std::countr_zero(b);
      const int v = cache.Setcon(FilterSubsets(sets, s & ~(1u << bit)));
      if (inner < 0 || v < inner) {
        inner = v;
        inner_bit = bit;
      }
    }
    if (!have || inner + 1 > best.value) {
      best = {inner + 1, s, inner_bit};
      have = true;
    }
  }
  return best;
}

}  // namespace

Adversary::Adversary(int n, std::vector<ProcessSet> live_sets) : n_(n) {
  CheckUniverseSize(n);
  bits_.reserve(live_sets.size());
  for (const ProcessSet& s : live_sets) {
    if (s.n() != n) {
      throw InputError("live set " + s.to_string() + " is over n=" +
                       std::to_string(s.n()) + ", adversary is over n=" +
                       std::to_string(n));
    }
    if (s.empty()) throw InputError("live sets must be non-empty");
    bits_.push_back(s.bits());
  }
  std::sort(bits_.begin(), bits_.end());
  if (std::adjacent_find(bits_.begin(), bits_.end()) != bits_.end()) {
    throw InputError("duplicate live set");
  }
}

Adversary Adversary::FromSortedBits(int n, std::vector<std::uint32_t> bits) {
  CheckUniverseSize(n);
  Adversary a;
  a.n_ = n;
  a.bits_ = std::move(bits);
  return a;
}

std::vector<ProcessSet> Adversary::live_sets() const {
  std::vector<ProcessSet> out;
  out.reserve(bits_.size());
  for (std::uint32_t b : bits_) out.emplace_back(n_, b);
  return out;
}

bool Adversary::contains(const ProcessSet& s) const {
  return s.n() == n_ && std::binary_search(bits_.begin(), bits_.end(), s.bits());
}

std::string Adversary::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i != 0) os << ',';
    os << ProcessSet(n_, bits_[i]).to_string();
  }
  os << '}';
  return os.str();
}

Adversary Restrict(const Adversary& adversary, const ProcessSet& p) {
  if (p.n() != adversary.n()) {
    throw InputError("restriction set is over a different universe");
  }
  return Adversary::FromSortedBits(adversary.n(),
                                   FilterSubsets(adversary.bits(), p.bits()));
}

Adversary RestrictIntersecting(const Adversary& adversary, const ProcessSet& p,
                               const ProcessSet& q) {
  if (p.n() != adversary.n() || q.n() != adversary.n()) {
    throw InputError("restriction set is over a different universe");
  }
  if (!q.subset_of(p)) {
    throw InputError("Q=" + q.to_string() + " is not a subset of P=" +
                     p.to_string());
  }
  return Adversary::FromSortedBits(
      adversary.n(), FilterIntersecting(adversary.bits(), p.bits(), q.bits()));
}

std::size_t SetconCache::KeyHash::operator()(
    const std::vector<std::uint32_t>& key) const {
  std::size_t h = key.size();
  for (std::uint32_t v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int SetconCache::Setcon(const Adversary& adversary) {
  return Setcon(adversary.bits());
}

int SetconCache::Setcon(const std::vector<std::uint32_t>& sorted_bits) {
  if (sorted_bits.empty()) return 0;
  if (auto it = memo_.find(sorted_bits); it != memo_.end()) return it->second;
  const int value = EvaluateLevel(*this, sorted_bits).value;
  memo_.emplace(sorted_bits, value);
  return value;
}

int SetconCache::Restricted(const Adversary& adversary, std::uint32_t p) {
  return Setcon(FilterSubsets(adversary.bits(), p));
}

int SetconCache::RestrictedIntersecting(const Adversary& adversary,
                                        std::uint32_t p, std::uint32_t q) {
  return Setcon(FilterIntersecting(adversary.bits(), p, q));
}

int Setcon(const Adversary& adversary) {
  SetconCache cache;
  return cache.Setcon(adversary);
}

SetconWitness ComputeSetconWitness(const Adversary& adversary) {
  SetconCache cache;
  SetconWitness witness;
  witness.value = cache.Setcon(adversary);
  std::vector<std::uint32_t> current = adversary.bits();
  while (!current.empty()) {
    const MaxMin level = EvaluateLevel(cache, current);
    witness.chain.push_back(
        {ProcessSet(adversary.n(), level.live_set), level.removed_bit + 1});
    current = FilterSubsets(current, level.live_set & ~(1u << level.removed_bit));
  }
  return witness;
}

std::optional<int> ReplaySetconWitness(const Adversary& adversary,
                                       const SetconWitness& witness) {
  SetconCache cache;
  std::vector<std::uint32_t> current = adversary.bits();
  int depth = 0;
  for (const SetconStep& step : witness.chain) {
    if (current.empty()) return std::nullopt;
    const std::uint32_t s = step.live_set.bits();
    if (!std::binary_search(current.begin(), current.end(), s) ||
        !step.live_set.contains(step.removed)) {
      return std::nullopt;
    }
    // The step must realize the max over S and the min over a.
    const MaxMin level = EvaluateLevel(cache, current);
    const auto next = FilterSubsets(current, s & ~(1u << (step.removed - 1)));
    if (cache.Setcon(next) + 1 != level.value) return std::nullopt;
    for (std::uint32_t b = s; b != 0; b &= b - 1) {
      if (cache.Setcon(FilterSubsets(current, s & ~(b & -b))) <
          cache.Setcon(next)) {
        return std::nullopt;
      }
    }
    current = next;
    ++depth;
  }
  if (!current.empty() || depth != witness.value) return std::nullopt;
  return depth;
}

int Csize(const Adversary& adversary) {
  if (adversary.empty()) {
    throw InputError("csize is undefined for the empty adversary");
  }
  const int n = adversary.n();
  const auto hits_all = [&](std::uint32_t h) {
    return std::all_of(adversary.bits().begin(), adversary.bits().end(),
                       [h](std::uint32_t s) { return (s & h) != 0; });
  };
  for (int k = 1; k <= n; ++k) {
    // Gosper's hack over all k-subsets in ascending order.
    std::uint32_t h = (1u << k) - 1;
    const std::uint32_t limit = 1u << n;
    while (h < limit) {
      if (hits_all(h)) return k;
      const std::uint32_t c = h & -h;
      const std::uint32_t r = h + c;
      h = (((r ^ h) >> 2) / c) | r;
    }
  }
  // Unreachable: the full universe hits every non-empty live set.
  return n;
}

bool IsSupersetClosed(const Adversary& adversary) {
  const std::uint32_t full = adversary.universe().bits();
  for (std::uint32_t s : adversary.bits()) {
    // Every superset is s plus a subset of the complement.
    const std::uint32_t rest = full & ~s;
    std::uint32_t add = 0;
    while (true) {
      if (!std::binary_search(adversary.bits().begin(), adversary.bits().end(),
                              s | add)) {
        return false;
      }
      if (add == rest) break;
      add = (add - rest) & rest;
    }
  }
  return true;
}

namespace {

std::vector<int> SizeCounts(const Adversary& adversary) {
  std::vector<int> counts(adversary.n() + 1, 0);
  for (std::uint32_t s : adversary.bits()) ++counts[std::popcount(s)];
  return counts;
}

long long Binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool IsSymmetric(const Adversary& adversary) {
  const std::vector<int> counts = SizeCounts(adversary);
  for (int k = 1; k <= adversary.n(); ++k) {
    if (counts[k] != 0 && counts[k] != Binomial(adversary.n(), k)) return false;
  }
  return true;
}

int SymmetricSetcon(const Adversary& adversary) {
  if (!IsSymmetric(adversary)) {
    throw InputError("adversary " + adversary.to_string() +
                     " is not symmetric");
  }
  const std::vector<int> counts = SizeCounts(adversary);
  return static_cast<int>(
      std::count_if(counts.begin() + 1, counts.end(), [](int c) { return c > 0; }));
}

std::optional<FairnessViolation> FindFairnessViolation(
    const Adversary& adversary) {
  SetconCache cache;
  const int n = adversary.n();
  for (std::uint32_t p = (1u << n); p-- > 0;) {
    const int whole = cache.Restricted(adversary, p);
    // Q ranges over non-empty subsets of P in ascending encoding.
    for (std::uint32_t q = (0u - p) & p; q != 0; q = (q - p) & p) {
      const int lhs = cache.RestrictedIntersecting(adversary, p, q);
      const int rhs = std::min(std::popcount(q), whole);
      if (lhs != rhs) {
        return FairnessViolation{ProcessSet(n, p), ProcessSet(n, q), lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

bool IsFair(const Adversary& adversary) {
  return !FindFairnessViolation(adversary).has_value();
}

AgreementFunction AgreementFunctionOf(const Adversary& adversary) {
  SetconCache cache;
  const int n = adversary.n();
  std::vector<int> table(std::size_t{1} << n);
  for (std::uint32_t p = 0; p < table.size(); ++p) {
    table[p] = cache.Restricted(adversary, p);
  }
  return AgreementFunction(n, std::move(table));
}

std::vector<Adversary> AllAdversaries(int n) {
  CheckUniverseSize(n);
  if (n > 4) throw InputError("AllAdversaries is limited to n <= 4");
  const std::uint32_t subsets = (1u << n) - 1;  // non-empty subsets 1..2^n-1
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::vector<Adversary> out;
  out.reserve(families);
  for (std::uint64_t f = 0; f < families; ++f) {
    std::vector<std::uint32_t> bits;
    for (std::uint32_t i = 0; i < subsets; ++i) {
      if ((f >> i) & 1) bits.push_back(i + 1);
    }
    out.push_back(Adversary::FromSortedBits(n, std::move(bits)));
  }
  return out;
}

Adversary SupersetClosure(const Adversary& adversary) {
  const int n = adversary.n();
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> bits;
  for (std::uint32_t s = 1; s < limit; ++s) {
    for (std::uint32_t l : adversary.bits()) {
      if (SubsetBits(l, s)) {
        bits.push_back(s);
        break;
      }
    }
  }
  return Adversary::FromSortedBits(n, std::move(bits));
}

Adversary SymmetricAdversary(int n, std::uint32_t size_mask) {
  CheckUniverseSize(n);
  const std::uint32_t limit = 1u << n;
  std::vector<std::uint32_t> bits;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if ((size_mask >> (std::popcount(s) - 1)) & 1u) bits.push_back(s);
  }
  return Adversary::FromSortedBits(n, std::move(bits));
}

std::vector<Adversary> SupersetClosedAdversaries(int n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Adversary> out;
  for (const Adversary& a : AllAdversaries(n)) {
    Adversary closed = SupersetClosure(a);
    if (seen.insert(closed.bits()).second) out.push_back(std::move(closed));
  }
  return out;
}

std::vector<Adversary> SymmetricAdversaries(int n) {
  std::vector<Adversary> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    out.push_back(SymmetricAdversary(n, mask));
  }
  return out;
}

Adversary WaitFreeAdversary(int n) {
  return SymmetricAdversary(n, (1u << n) - 1);
}

Adversary TResilientAdversary(int n, int t) {
  CheckUniverseSize(n);
  if (t < 0 || t >= n) throw InputError("t must satisfy 0 <= t < n");
  std::uint32_t mask = 0;
  for (int k = n - t; k <= n; ++k) mask |= 1u << (k - 1);
  return SymmetricAdversary(n, mask);
}

}  // namespace advlab
