// Copyright 2026 The Maximin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maximin/mms.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "maximin/generators.h"
#include "maximin/rng.h"
#include "oracles.h"
#include "test_util.h"

namespace maximin {
namespace {

using testing::Identical;
using testing::Row;

Value MinBundle(const SubmodularValuation& f, const Allocation& a) {
  Value low = f.Evaluate(a.bundle(0));
  for (const Bundle& b : a.bundles()) low = Min(low, f.Evaluate(b));
  return low;
}

std::vector<Bundle> Sorted(std::vector<Bundle> bundles) {
  for (auto& b : bundles) std::sort(b.begin(), b.end());
  std::sort(bundles.begin(), bundles.end());
  return bundles;
}

// Share of f restricted to `goods`, split into k parts.
Value RestrictedShare(const SubmodularValuation& f, const Bundle& goods, std::size_t k) {
  const std::size_t r = goods.size();
  return testing::SubsetDpShare(testing::TableOf(
                                    [&](GoodMask local) {
                                      GoodMask s = 0;
                                      for (std::size_t t = 0; t < r; ++t) {
                                        if (local >> t & 1) s |= Bit(goods[t]);
                                      }
                                      return f.Evaluate(s);
                                    },
                                    r),
                                r, k);
}

ValuationPtr RandomMonotone(Rng& rng, std::size_t n, std::size_t m, int which) {
  const GeneratorKind kinds[] = {GeneratorKind::kCoverage,
                                 GeneratorKind::kBudgetAdditive,
                                 GeneratorKind::kExplicit};
  return GenerateSubmodular(DefaultSpec(kinds[which % 3], n, m, rng.Next())).front();
}

TEST(CanonicalPartitionCountTest, Values) {
  EXPECT_EQ(CanonicalPartitionCount(4, 2), 8u);    // 1 + 7
  EXPECT_EQ(CanonicalPartitionCount(5, 3), 41u);   // 1 + 15 + 25
  EXPECT_EQ(CanonicalPartitionCount(0, 3), 1u);
  EXPECT_EQ(CanonicalPartitionCount(3, 1), 1u);
  EXPECT_EQ(CanonicalPartitionCount(200, 50), ~std::uint64_t{0});
}

TEST(MmsExactTest, Examples) {
  EXPECT_EQ(MmsExactAdditive(Identical(2, {5, 5, 5, 5}), 0).value, 10);
  const MmsCertificate c1 = MmsExactAdditive(Identical(3, {1, 1, 1, 3, 3}), 1);
  EXPECT_EQ(c1.value, 3);
  EXPECT_EQ(c1.agent, 1u);
  EXPECT_EQ(Sorted(c1.witness.bundles()), Sorted({{0, 1, 2}, {3}, {4}}));
  EXPECT_EQ(MmsExactAdditive(Identical(1, {4, 0, 7}), 0).value, 11);
  EXPECT_EQ(MmsExactRow(Row({7}), 3).value, 0);
  EXPECT_EQ(MmsExactRow({}, 2).value, 0);
}

TEST(MmsExactTest, GapFixture) {
  const auto tables = FixtureSubmodularGap();
  const MmsCertificate a = MmsExactSubmodular(*tables[0], 2);
  EXPECT_EQ(a.value, 2);
  EXPECT_EQ(Sorted(a.witness.bundles()), Sorted({{0, 1}, {2, 3}}));
  const MmsCertificate b = MmsExactSubmodular(*tables[1], 2);
  EXPECT_EQ(b.value, 2);
  EXPECT_EQ(Sorted(b.witness.bundles()), Sorted({{0, 2}, {1, 3}}));
}

TEST(MmsExactTest, WitnessIsUniqueOnGapFixture) {
  const auto tables = FixtureSubmodularGap();
  int optimal = 0;
  testing::ForEachAssignment({0, 1, 2, 3}, 2, 4, [&](const Allocation& a) {
    if (MinBundle(*tables[0], a) == 2) ++optimal;
  });
  EXPECT_EQ(optimal, 2);  // the same partition, labelled two ways
}

TEST(MmsExactTest, ChoresUseTheSameMaxMin) {
  const MmsCertificate c = MmsExactAdditive(Identical(2, {-3, -3, -2}, ItemKind::kChores), 0);
  EXPECT_EQ(c.value, -5);
  const AdditiveValuation f(Row({-3, -3, -2}));
  EXPECT_EQ(MmsExactSubmodular(f, 2).value, -5);
}

TEST(MmsExactTest, MatchesSubsetDp) {
  Rng rng(40);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 4, m = n + trial % 8;
    const auto rows = testing::RandomIntRows(rng, 1, m, trial % 5 == 0 ? -100 : 0,
                                             trial % 5 == 0 ? 0 : 100);
    std::vector<Value> row;
    for (auto v : rows[0]) row.emplace_back(static_cast<long>(v));
    const MmsCertificate c = MmsExactRow(row, n);
    EXPECT_EQ(c.value, testing::ShareOfIntRow(rows[0], n));
    if (m <= 10) {
      const AdditiveValuation f(row);
      EXPECT_EQ(MmsExactSubmodular(f, n).value, c.value);
    }
  }
}

TEST(MmsExactTest, SubmodularMatchesSubsetDp) {
  Rng rng(41);
  for (int trial = 0; trial < 45; ++trial) {
    const std::size_t n = 2 + trial % 3, m = n + trial % 7;
    const ValuationPtr f = RandomMonotone(rng, n, m, trial);
    const MmsCertificate c = MmsExactSubmodular(*f, n);
    EXPECT_EQ(c.value, testing::ShareOf(*f, n));
    EXPECT_TRUE(c.witness.complete());
    EXPECT_EQ(MinBundle(*f, c.witness), c.value);
  }
}

TEST(MmsExactTest, NonMonotoneOracleIsStillExact) {
  // f(S) = |S| (4 - |S|) on four goods: submodular, not monotone.
  std::vector<Value> table(16);
  for (GoodMask s = 0; s < 16; ++s) {
    const long k = std::popcount(s);
    table[s] = k * (4 - k);
  }
  const ExplicitTable f(4, table);
  EXPECT_FALSE(f.monotone());
  EXPECT_EQ(MmsExactSubmodular(f, 2).value, testing::ShareOf(f, 2));
  EXPECT_EQ(MmsExactSubmodular(f, 3).value, testing::ShareOf(f, 3));
}

TEST(MmsExactTest, WitnessConsistencyAndScaleCovariance) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3, m = n + trial % 6;
    const AdditiveInstance inst =
        testing::FromIntRows(testing::RandomIntRows(rng, n, m, 0, 50), ItemKind::kGoods);
    const Value lambda = Ratio(1 + trial % 4, 3);
    std::vector<std::vector<Value>> scaled = inst.values();
    for (auto& v : scaled[0]) v *= lambda;
    const AdditiveInstance inst2(scaled, ItemKind::kGoods);
    for (std::size_t i = 0; i < n; ++i) {
      const MmsCertificate c = MmsExactAdditive(inst, i);
      Value low = BundleValue(inst, i, c.witness.bundle(0));
      for (std::size_t k = 0; k < n; ++k) low = Min(low, BundleValue(inst, i, c.witness.bundle(k)));
      EXPECT_EQ(low, c.value);
      const MmsCertificate c2 = MmsExactAdditive(inst2, i);
      EXPECT_EQ(c2.value, i == 0 ? c.value * lambda : c.value);
    }
  }
}

TEST(MmsExactTest, BudgetIsEnforced) {
  std::vector<Value> row(12, Value(1));
  try {
    MmsExactRow(row, 4, 1000);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  const AdditiveValuation f(row);
  EXPECT_THROW(MmsExactSubmodular(f, 4, 1000), Error);
  EXPECT_NO_THROW(MmsExactRow(row, 4, CanonicalPartitionCount(12, 4)));
}

TEST(PartitionMatroidTest, Independence) {
  const PartitionMatroid mat({0, 2, 3}, 2);
  EXPECT_EQ(mat.universe_size(), 6u);
  EXPECT_TRUE(mat.IsIndependent({{0, 0}, {2, 0}, {3, 1}}));
  EXPECT_FALSE(mat.IsIndependent({{0, 0}, {0, 1}}));
  EXPECT_FALSE(mat.IsIndependent({{1, 0}}));
  EXPECT_FALSE(mat.IsIndependent({{0, 2}}));
  EXPECT_TRUE(mat.IsIndependent({}));
}

TEST(MatroidMaxTest, ModularObjectiveIsOptimalForGreedy) {
  const PartitionMatroid mat({0, 1, 2, 3}, 3);
  const std::vector<std::vector<long>> w = {{1, 5, 2}, {4, 4, 0}, {0, 0, 9}, {3, 1, 1}};
  const MatroidObjective modular = [&](const IndependentSet& s) {
    Value sum = 0;
    for (const auto& p : s) sum += w[p.good][p.slot];
    return sum;
  };
  const IndependentSet greedy = GreedyMatroidMax(modular, mat);
  const IndependentSet exact = ExhaustiveMatroidMax(modular, mat);
  EXPECT_TRUE(mat.IsIndependent(greedy));
  EXPECT_EQ(modular(greedy), 21);
  EXPECT_EQ(modular(exact), 21);
}

TEST(MatroidMaxTest, EmptyUniverse) {
  const PartitionMatroid mat({}, 2);
  const MatroidObjective zero = [](const IndependentSet&) { return Value(0); };
  EXPECT_TRUE(ExhaustiveMatroidMax(zero, mat).empty());
  EXPECT_TRUE(GreedyMatroidMax(zero, mat).empty());
}

TEST(MatroidMaxTest, BigSingletonsReachTheCap) {
  const AdditiveValuation f(Row({5, 6, 7, 8}));
  const SlotObjective g(f, Value(4), 4);
  const PartitionMatroid mat({0, 1, 2, 3}, 4);
  EXPECT_EQ(g(GreedyMatroidSolver().Maximize(g, mat)), g.Ceiling());
  EXPECT_EQ(g(ExhaustiveMatroidSolver().Maximize(g, mat)), g.Ceiling());
}

TEST(MatroidMaxTest, GreedyIsWithinHalfOfExhaustive) {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 3 + trial % 5, slots = 2 + trial % 3;
    const ValuationPtr f = RandomMonotone(rng, 2, m, trial);
    const Value tau = f->Evaluate(FullMask(m)) * Value(1 + trial % 3, 2 * static_cast<long>(slots));
    const SlotObjective g(*f, tau, slots);
    Bundle goods(m);
    for (std::size_t j = 0; j < m; ++j) goods[j] = j;
    const PartitionMatroid mat(goods, slots);
    const IndependentSet greedy = GreedyMatroidSolver().Maximize(g, mat);
    const IndependentSet slot_exact = ExhaustiveSlotMax(g, mat);
    const MatroidObjective plain = [&](const IndependentSet& s) { return g(s); };
    const IndependentSet exact = ExhaustiveMatroidMax(plain, mat);
    EXPECT_TRUE(mat.IsIndependent(greedy));
    EXPECT_EQ(g(slot_exact), g(exact));
    EXPECT_GE(g(greedy) * 2, g(exact));
    EXPECT_LE(g(greedy), g(exact));
  }
}

TEST(SplitBundleTest, HalvesAreBothLarge) {
  // Many light goods, so that tau can reach the bundle value while every
  // good stays below tau / 9.
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 40 + trial % 20;
    std::vector<Value> w;
    for (std::size_t j = 0; j < m; ++j) w.emplace_back(static_cast<long>(rng.UniformInt(1, 4)));
    Value total = 0;
    for (const auto& x : w) total += x;
    const BudgetAdditive f(w, total * Ratio(rng.UniformInt(5, 10), 10));
    const GoodMask bundle = (static_cast<GoodMask>(rng.Next()) | FullMask(36)) & FullMask(m);
    const Value tau = f.Evaluate(bundle) * Ratio(rng.UniformInt(9, 12), 12);
    for (std::size_t j = 0; j < m; ++j) ASSERT_LT(f.Singleton(j) * 9, tau);
    const auto [a, b] = SplitBundle(f, bundle, tau);
    EXPECT_EQ(a | b, bundle);
    EXPECT_EQ(a & b, GoodMask{0});
    EXPECT_GE(f.Evaluate(a) * 9, tau * 4);
    EXPECT_GE(f.Evaluate(b) * 9, tau * 4);
  }
}

TEST(ThresholdTest, LowGoodsSplitIntoLargeParts) {
  // For tau <= mu and |H| < n there is a 2(n - |H|)-partition of the low
  // goods with every part worth at least 4 tau / 9.
  Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2, m = n + 1 + trial % 5;
    const ValuationPtr f = RandomMonotone(rng, n, m, trial);
    const Value mu = testing::ShareOf(*f, n);
    if (mu == 0) continue;
    for (const Value& tau : {mu, Value(mu * Value(2, 3))}) {
      Bundle low;
      for (std::size_t j = 0; j < m; ++j) {
        if (f->Singleton(j) * 9 < tau) low.push_back(j);
      }
      const std::size_t h = m - low.size();
      if (h >= n) continue;
      EXPECT_GE(RestrictedShare(*f, low, 2 * (n - h)) * 9, tau * 4) << "trial " << trial;
    }
  }
}

TEST(ThresholdTest, RejectionIsSound) {
  Rng rng(46);
  const ExhaustiveMatroidSolver solver;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2, m = n + trial % 5;
    const ValuationPtr f = RandomMonotone(rng, n, m, trial);
    const Value mu = testing::ShareOf(*f, n);
    const Value total = f->Evaluate(FullMask(m));
    for (long k = 1; k <= 8; ++k) {
      const Value tau = total * Value(k, 8);
      const ThresholdTest t = TestThreshold(*f, n, tau, solver);
      if (tau <= mu) {
        EXPECT_TRUE(t.rule_passed) << "rejected tau " << tau << " <= mu " << mu;
      }
      if (t.accepted) {
        ASSERT_TRUE(t.partition.has_value());
        EXPECT_TRUE(t.partition->complete());
        EXPECT_GE(MinBundle(*f, *t.partition) * 9, tau);
      }
    }
  }
}

TEST(MmsApproxTest, Examples) {
  const ExhaustiveMatroidSolver solver;
  const AdditiveValuation single(Row({3, 4}));
  const ApproxMmsResult one = MmsApproxSubmodular(single, 1, solver);
  EXPECT_EQ(one.partition.bundle(0), (Bundle{0, 1}));
  EXPECT_GE(one.threshold * (1 + Value(1, 100)), 7);
  EXPECT_TRUE(one.certified);

  const AdditiveValuation f(Row({4, 3, 2, 1}));
  EXPECT_EQ(testing::ShareOf(f, 2), 5);
  const ApproxMmsResult r = MmsApproxSubmodular(f, 2, solver);
  EXPECT_TRUE(r.certified);
  EXPECT_TRUE(r.partition.complete());
  EXPECT_GE(MinBundle(f, r.partition) * 9, 5);
  EXPECT_GE(r.threshold * (1 + Value(1, 100)), 5);
}

TEST(MmsApproxTest, GreedyIsNotCertified) {
  const AdditiveValuation f(Row({4, 3, 2, 1}));
  const ApproxMmsResult r = MmsApproxSubmodular(f, 2, GreedyMatroidSolver());
  EXPECT_FALSE(r.certified);
  EXPECT_GE(MinBundle(f, r.partition) * 9, r.threshold);
}

TEST(MmsApproxTest, RejectsNonMonotone) {
  const ExplicitTable f(2, Row({0, 2, 2, 1}));
  EXPECT_THROW(MmsApproxSubmodular(f, 2, ExhaustiveMatroidSolver()), Error);
}

TEST(MmsApproxTest, CoverageSweep) {
  Rng rng(47);
  const ExhaustiveMatroidSolver solver;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2, m = n + trial % 6;
    const auto f = GenerateSubmodular(DefaultSpec(GeneratorKind::kCoverage, n, m, rng.Next())).front();
    const Value mu = testing::ShareOf(*f, n);
    const ApproxMmsResult r = MmsApproxSubmodular(*f, n, solver);
    EXPECT_TRUE(r.partition.complete());
    EXPECT_GE(MinBundle(*f, r.partition) * 9, r.threshold);
    EXPECT_GE(r.threshold * (1 + Value(1, 100)), mu);
    EXPECT_GE(MinBundle(*f, r.partition) * 9, mu) << "trial " << trial;
  }
}

}  // namespace
}  // namespace maximin
