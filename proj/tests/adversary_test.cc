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

#include <random>

#include <gtest/gtest.h>

#include "advlab/errors.h"
#include "oracles.h"

namespace advlab {
namespace {

ProcessSet S(std::initializer_list<ProcessId> m) { return ProcessSet::Of(3, m); }

Adversary A1() { return Adversary(3, {S({1}), S({2, 3}), S({1, 2, 3})}); }

// All non-empty subsets of {1,2,3} except {1,2}.
Adversary A2() {
  std::vector<ProcessSet> sets;
  ForEachSubset(3, [&](const ProcessSet& s) {
    if (!s.empty() && s != S({1, 2})) sets.push_back(s);
  });
  return Adversary(3, sets);
}

TEST(AdversaryTest, ValidatesLiveSets) {
  EXPECT_THROW(Adversary(3, {ProcessSet::Empty(3)}), InputError);
  EXPECT_THROW(Adversary(3, {S({1}), S({1})}), InputError);
  EXPECT_THROW(Adversary(3, {ProcessSet::Of(4, {1})}), InputError);
}

TEST(AdversaryTest, CanonicalOrderIsEncodingOrder) {
  const Adversary a(3, {S({1, 2, 3}), S({2, 3}), S({1})});
  EXPECT_EQ(a.to_string(), "{{1},{2,3},{1,2,3}}");
  EXPECT_EQ(a, A1());
}

TEST(AdversaryTest, Restrict) {
  EXPECT_EQ(Restrict(A1(), S({1, 2})), Adversary(3, {S({1})}));
  EXPECT_EQ(Restrict(A1(), ProcessSet::Full(3)), A1());
  EXPECT_EQ(Restrict(A1(), S({2, 3})), Adversary(3, {S({2, 3})}));
  EXPECT_THROW(Restrict(A1(), ProcessSet::Of(4, {1})), InputError);
}

TEST(AdversaryTest, RestrictIntersecting) {
  const ProcessSet pi = ProcessSet::Full(3);
  EXPECT_EQ(RestrictIntersecting(A1(), pi, S({2, 3})),
            Adversary(3, {S({2, 3}), S({1, 2, 3})}));
  EXPECT_EQ(RestrictIntersecting(A1(), pi, S({1})),
            Adversary(3, {S({1}), S({1, 2, 3})}));
  EXPECT_EQ(RestrictIntersecting(A2(), S({1, 3}), S({1, 3})),
            Restrict(A2(), S({1, 3})));
  EXPECT_THROW(RestrictIntersecting(A1(), S({1}), S({2})), InputError);
}

TEST(SetconTest, KnownValues) {
  EXPECT_EQ(Setcon(Adversary::Empty(3)), 0);
  EXPECT_EQ(Setcon(A1()), 2);
  EXPECT_EQ(Setcon(RestrictIntersecting(A1(), ProcessSet::Full(3), S({2, 3}))), 1);
}

TEST(SetconTest, MatchesOracles) {
  EXPECT_EQ(Setcon(A2()), oracle::NaiveSetcon(oracle::FamilyOf(A2())));
  EXPECT_EQ(Setcon(A2()), 2);
  const Adversary wf = WaitFreeAdversary(3);
  EXPECT_EQ(Setcon(wf), oracle::DistinctSizes(oracle::FamilyOf(wf)));
  EXPECT_EQ(Setcon(wf), 3);
}

TEST(SetconTest, MemoizedEqualsUnmemoizedOnAllThreeProcessAdversaries) {
  SetconCache cache;
  for (const Adversary& a : AllAdversaries(3)) {
    ASSERT_EQ(cache.Setcon(a), oracle::NaiveSetcon(oracle::FamilyOf(a)))
        << a.to_string();
  }
}

TEST(SetconTest, WitnessChainReplays) {
  for (const Adversary& a : AllAdversaries(3)) {
    const SetconWitness w = ComputeSetconWitness(a);
    EXPECT_EQ(static_cast<int>(w.chain.size()), w.value) << a.to_string();
    EXPECT_EQ(ReplaySetconWitness(a, w), w.value) << a.to_string();
  }
  // A chain that does not follow the recursion is rejected.
  SetconWitness bogus{2, {{S({1}), 1}, {S({2, 3}), 2}}};
  EXPECT_FALSE(ReplaySetconWitness(A1(), bogus).has_value());
}

TEST(SetconTest, WitnessTieBreakIsSmallestEncoding) {
  const SetconWitness w = ComputeSetconWitness(A1());
  ASSERT_EQ(w.chain.size(), 2u);
  EXPECT_EQ(w.chain[0].live_set, S({1, 2, 3}));
  EXPECT_EQ(w.chain[0].removed, 1);
  EXPECT_EQ(w.chain[1].live_set, S({2, 3}));
  EXPECT_EQ(w.chain[1].removed, 2);
}

TEST(SetconTest, MonotoneUnderContainment) {
  const std::vector<Adversary> all = AllAdversaries(3);
  SetconCache cache;
  for (const Adversary& a : all) {
    for (const Adversary& b : all) {
      bool contained = true;
      for (std::uint32_t l : a.bits()) {
        contained = contained && std::binary_search(b.bits().begin(), b.bits().end(), l);
      }
      if (contained) ASSERT_LE(cache.Setcon(a), cache.Setcon(b));
    }
  }
}

TEST(SetconTest, ChainInequality) {
  // setcon(A|_{S\{p},A}) >= setcon(A|_{S,A}) - 1 for the active set A = Pi.
  SetconCache cache;
  for (const Adversary& a : AllAdversaries(3)) {
    for (std::uint32_t s : a.bits()) {
      for (int p = 0; p < 3; ++p) {
        if (!(s & (1u << p))) continue;
        for (std::uint32_t active = 1; active < 8; ++active) {
          const int whole = cache.RestrictedIntersecting(a, s, s & active);
          const int less = cache.RestrictedIntersecting(a, s & ~(1u << p),
                                                        s & ~(1u << p) & active);
          ASSERT_GE(less, whole - 1) << a.to_string();
        }
      }
    }
  }
}

TEST(CsizeTest, Examples) {
  EXPECT_EQ(Csize(Adversary(3, {S({1, 2, 3})})), 1);
  EXPECT_EQ(Csize(TResilientAdversary(3, 1)), 2);
  EXPECT_EQ(Csize(Adversary(3, {S({1}), S({2, 3})})), 2);
  EXPECT_THROW(Csize(Adversary::Empty(3)), InputError);
  for (const Adversary& a : AllAdversaries(3)) {
    if (a.empty()) continue;
    ASSERT_EQ(Csize(a), oracle::BruteCsize(oracle::FamilyOf(a), 3));
  }
}

TEST(ClassifyTest, SupersetClosed) {
  EXPECT_TRUE(IsSupersetClosed(TResilientAdversary(3, 1)));
  EXPECT_FALSE(IsSupersetClosed(A1()));
  EXPECT_TRUE(IsSupersetClosed(Adversary::Empty(3)));
}

TEST(ClassifyTest, Symmetric) {
  EXPECT_TRUE(IsSymmetric(SymmetricAdversary(3, 0b011)));
  EXPECT_FALSE(IsSymmetric(A1()));
  EXPECT_FALSE(IsSymmetric(A2()));
  EXPECT_FALSE(IsSupersetClosed(A2()));
}

TEST(ClassifyTest, SymmetricSetcon) {
  EXPECT_EQ(SymmetricSetcon(SymmetricAdversary(3, 0b011)), 2);
  EXPECT_EQ(SymmetricSetcon(WaitFreeAdversary(4)), 4);
  EXPECT_EQ(SymmetricSetcon(SymmetricAdversary(3, 0b100)), 1);
  EXPECT_THROW(SymmetricSetcon(A1()), InputError);
}

TEST(FairnessTest, KnownExamples) {
  const std::optional<FairnessViolation> v = FindFairnessViolation(A1());
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->participating, ProcessSet::Full(3));
  EXPECT_EQ(v->subset, S({2, 3}));
  EXPECT_EQ(v->restricted_setcon, 1);
  EXPECT_EQ(v->bound, 2);
  EXPECT_TRUE(IsFair(A2()));
  EXPECT_TRUE(IsFair(TResilientAdversary(3, 1)));
}

TEST(FairnessTest, MatchesLiteralDefinitionOnAllThreeProcessAdversaries) {
  for (const Adversary& a : AllAdversaries(3)) {
    ASSERT_EQ(IsFair(a), oracle::NaiveFair(oracle::FamilyOf(a), 3)) << a.to_string();
  }
}

TEST(FairnessTest, WitnessViolatesDefinition) {
  for (const Adversary& a : AllAdversaries(3)) {
    const std::optional<FairnessViolation> v = FindFairnessViolation(a);
    if (!v) continue;
    const oracle::Family f = oracle::FamilyOf(a);
    const oracle::Set p = oracle::SetOf(v->participating);
    const oracle::Set q = oracle::SetOf(v->subset);
    ASSERT_FALSE(q.empty());
    ASSERT_TRUE(oracle::Includes(p, q));
    const int lhs = oracle::NaiveSetcon(oracle::WithinMeeting(f, p, q));
    const int rhs = std::min<int>(q.size(), oracle::NaiveSetcon(oracle::Within(f, p)));
    ASSERT_NE(lhs, rhs);
  }
}

TEST(FairnessTest, PropertyOneBoundOnRandomFourProcessAdversaries) {
  std::mt19937_64 rng(7);
  SetconCache cache;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint32_t> bits;
    for (std::uint32_t s = 1; s < 16; ++s) {
      if (rng() & 1) bits.push_back(s);
    }
    const Adversary a = Adversary::FromSortedBits(4, bits);
    const std::uint32_t p = rng() % 16;
    const std::uint32_t q = p & static_cast<std::uint32_t>(rng());
    ASSERT_LE(cache.RestrictedIntersecting(a, p, q),
              std::min(std::popcount(q), cache.Restricted(a, p)));
  }
}

TEST(AgreementFunctionOfTest, CounterexampleTable) {
  const AgreementFunction alpha = AgreementFunctionOf(A1());
  EXPECT_EQ(alpha(S({2})), 0);
  EXPECT_EQ(alpha(S({3})), 0);
  EXPECT_EQ(alpha(ProcessSet::Full(3)), 2);
  for (const ProcessSet& p : {S({1}), S({1, 2}), S({1, 3}), S({2, 3})}) {
    EXPECT_EQ(alpha(p), 1) << p.to_string();
  }
  EXPECT_EQ(alpha(ProcessSet::Empty(3)), 0);
}

TEST(AgreementFunctionOfTest, EmptyAndWaitFree) {
  const AgreementFunction zero = AgreementFunctionOf(Adversary::Empty(3));
  for (int v : zero.table()) EXPECT_EQ(v, 0);
  const AgreementFunction wf = AgreementFunctionOf(WaitFreeAdversary(3));
  ForEachSubset(3, [&](const ProcessSet& p) { EXPECT_EQ(wf(p), p.size()); });
}

TEST(GeneratorTest, FamilyCounts) {
  EXPECT_EQ(AllAdversaries(3).size(), 128u);
  EXPECT_EQ(SymmetricAdversaries(4).size(), 16u);
  // Superset-closed families on n=3 are the up-sets of the non-empty subsets:
  // the Dedekind number M(3) = 20 counts antichains of 2^{1,2,3}; dropping the
  // one containing the empty set leaves 19.
  EXPECT_EQ(SupersetClosedAdversaries(3).size(), 19u);
  for (const Adversary& a : SupersetClosedAdversaries(4)) {
    ASSERT_TRUE(IsSupersetClosed(a));
  }
  for (const Adversary& a : SymmetricAdversaries(4)) ASSERT_TRUE(IsSymmetric(a));
}

}  // namespace
}  // namespace advlab
