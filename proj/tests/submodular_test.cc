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

#include "maximin/submodular.h"

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <thread>

#include "maximin/generators.h"
#include "maximin/mms.h"
#include "maximin/multilinear.h"
#include "maximin/rng.h"
#include "maximin/round_robin.h"
#include "oracles.h"
#include "test_util.h"

namespace maximin {
namespace {

using testing::Row;

ValuationPtr Additive(std::initializer_list<long> w) {
  return std::make_shared<AdditiveValuation>(Row(w));
}

ValuationPtr Budget(std::initializer_list<long> w, long cap) {
  return std::make_shared<BudgetAdditive>(Row(w), Value(cap));
}

std::vector<ValuationPtr> Copies(const ValuationPtr& f, std::size_t n) {
  return std::vector<ValuationPtr>(n, f);
}

std::vector<Value> Half(std::size_t m) { return std::vector<Value>(m, Value(1, 2)); }

std::vector<Value> RandomPoint(Rng& rng, std::size_t m) {
  std::vector<Value> x;
  for (std::size_t j = 0; j < m; ++j) {
    const auto k = rng.UniformInt(0, 6);
    x.push_back(Ratio(k == 6 ? 1 : k, 6));  // includes 0 and 1
  }
  return x;
}

ValuationPtr RandomFamily(Rng& rng, std::size_t n, std::size_t m, int which) {
  const GeneratorKind kinds[] = {GeneratorKind::kCoverage,
                                 GeneratorKind::kBudgetAdditive,
                                 GeneratorKind::kExplicit};
  GeneratorSpec spec = DefaultSpec(kinds[which % 3], n, m, rng.Next());
  spec.hi = 20;
  return GenerateSubmodular(spec).front();
}

TEST(ValuationTest, Families) {
  const WeightedCoverage cover(Row({1, 2, 4}), {{0, 1}, {1}, {2}, {}});
  EXPECT_EQ(cover.Evaluate(GoodMask{0b0011}), 3);
  EXPECT_EQ(cover.Evaluate(GoodMask{0b1110}), 6);
  EXPECT_EQ(cover.Evaluate(GoodMask{0}), 0);
  const auto b = Budget({2, 2}, 3);
  EXPECT_EQ(b->Marginal(0, 1), 2);
  EXPECT_EQ(b->Marginal(Bit(0), 1), 1);
  EXPECT_THROW(ExplicitTable(2, Row({1, 1, 1, 2})), Error);  // v(empty) != 0
  EXPECT_THROW(ExplicitTable(2, Row({0, 1, 1})), Error);
  EXPECT_FALSE(AdditiveValuation(Row({1, -1})).monotone());
  EXPECT_EQ(Additive({3, 4})->Evaluate(std::vector<std::size_t>{0, 1}), 7);
}

TEST(ValuationTest, MarginalFunction) {
  const auto f = Budget({2, 3, 4}, 6);
  const MarginalValuation fh(f, Bit(1));
  EXPECT_EQ(fh.Evaluate(GoodMask{0}), 0);
  EXPECT_EQ(fh.Evaluate(Bit(2)), 3);
  EXPECT_EQ(fh.Evaluate(Bit(0) | Bit(1)), 2);
  EXPECT_TRUE(VerifySubmodular(fh).ok);
}

TEST(ValuationTest, ConcurrentEvaluationIsConsistent) {
  const auto f = Budget({1, 2, 3, 4, 5, 6, 7, 8}, 20);
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (GoodMask s = 0; s < 256; ++s) {
        Value expect = 0;
        for (std::size_t g = 0; g < 8; ++g) {
          if (s >> g & 1) expect += static_cast<long>(g + 1);
        }
        if (f->Evaluate(s) != Min(expect, Value(20))) ++mismatches;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(mismatches.load(), 0);
}

TEST(VerifySubmodularTest, Examples) {
  EXPECT_TRUE(VerifySubmodular(*Additive({3, 0, 5})).ok);
  EXPECT_TRUE(VerifySubmodular(*Budget({2, 2}, 3)).ok);
  for (const auto& t : FixtureSubmodularGap()) EXPECT_TRUE(VerifySubmodular(*t).ok);
}

TEST(VerifySubmodularTest, ReportsViolations) {
  // Supermodular: f({0, 1}) = 3 > f({0}) + f({1}).
  const SubmodularityReport sup = VerifySubmodular(ExplicitTable(2, Row({0, 1, 1, 3})));
  EXPECT_FALSE(sup.ok);
  EXPECT_EQ(sup.violation, SubmodularityReport::Violation::kSubmodularity);
  const SubmodularityReport dec = VerifySubmodular(ExplicitTable(2, Row({0, 2, 1, 1})));
  EXPECT_FALSE(dec.ok);
  EXPECT_EQ(dec.violation, SubmodularityReport::Violation::kMonotonicity);
  EXPECT_FALSE(sup.Describe().empty());
}

TEST(VerifySubmodularTest, SampledModeOnLargeGroundSets) {
  std::vector<Value> w(14, Value(3));
  const BudgetAdditive f(w, Value(20));
  VerifyOptions options;
  options.samples = 2000;
  const SubmodularityReport r = VerifySubmodular(f, options);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.exhaustive);
}

TEST(RoundRobinTest, ZeroThresholdsRetireEveryoneWithSingletons) {
  const RoundRobinRun run = RoundRobin(Copies(Additive({1, 2, 3}), 3),
                                       {Value(0), Value(0), Value(0)});
  EXPECT_EQ(run.phase1.size(), 3u);
  EXPECT_TRUE(run.phase2.empty());
  EXPECT_TRUE(run.allocation.complete());

  const RoundRobinRun scarce = RoundRobin(Copies(Additive({1}), 2), {Value(0), Value(0)});
  EXPECT_EQ(scarce.allocation.bundle(0), Bundle{0});
  EXPECT_TRUE(scarce.allocation.bundle(1).empty());
}

TEST(RoundRobinTest, IdenticalUnitGoods) {
  const auto f = Additive({1, 1, 1, 1});
  const RoundRobinRun run = RoundRobin(Copies(f, 2), {Value(2), Value(2)});
  EXPECT_EQ(run.phase1.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_GE(f->Evaluate(run.allocation.bundle(i)), Value(2, 10));
  }
  EXPECT_TRUE(run.allocation.complete());
}

TEST(RoundRobinTest, SingleAgentGetsEverything) {
  const RoundRobinRun run = RoundRobin({Budget({4, 1, 1}, 5)}, {Value(100)});
  EXPECT_EQ(run.allocation.bundle(0), (Bundle{0, 1, 2}));
}

TEST(RoundRobinTest, RejectsLengthMismatch) {
  EXPECT_THROW(RoundRobin(Copies(Additive({1}), 2), {Value(0)}), Error);
}

TEST(RoundRobinTest, PhaseTwoPicksAreGreedy) {
  Rng rng(30);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3, m = n + trial % 7;
    std::vector<ValuationPtr> vals;
    std::vector<Value> taus;
    for (std::size_t i = 0; i < n; ++i) {
      vals.push_back(RandomFamily(rng, n, m, trial + static_cast<int>(i)));
      taus.push_back(vals.back()->Evaluate(FullMask(m)));
    }
    const RoundRobinRun run = RoundRobin(vals, taus);
    std::vector<GoodMask> held(n, 0);
    GoodMask remaining = FullMask(m);
    for (const auto& p : run.phase1) {
      held[p.agent] |= Bit(p.good);
      remaining &= ~Bit(p.good);
    }
    for (const auto& p : run.phase2) {
      for (std::size_t g : GoodsOf(remaining)) {
        EXPECT_GE(p.gain, vals[p.agent]->Marginal(held[p.agent], g));
      }
      EXPECT_EQ(p.gain, vals[p.agent]->Marginal(held[p.agent], p.good));
      held[p.agent] |= Bit(p.good);
      remaining &= ~Bit(p.good);
    }
    EXPECT_EQ(remaining, GoodMask{0});
  }
}

TEST(DetectPositiveMmsTest, Examples) {
  EXPECT_FALSE(DetectPositiveMms(*Additive({1, 0, 0}), 2));
  EXPECT_TRUE(DetectPositiveMms(*Additive({1, 1}), 2));
  // Three goods covering the same unit element: every singleton is
  // positive, and with m = n every good can sit in its own bundle.
  const WeightedCoverage shared(Row({1}), {{0}, {0}, {0}});
  EXPECT_TRUE(DetectPositiveMms(shared, 3));
  EXPECT_EQ(MmsExactSubmodular(shared, 3).value, 1);
  EXPECT_EQ(testing::ShareOf(shared, 3), 1);
  EXPECT_EQ(testing::ShareOf(shared, 4), 0);
  EXPECT_FALSE(DetectPositiveMms(shared, 4));
}

TEST(AlgSubTest, Examples) {
  const AlgSubResult one = AlgSub({Budget({3, 1}, 3)});
  EXPECT_EQ(one.allocation.bundle(0), (Bundle{0, 1}));
  EXPECT_EQ(one.state.rounds, 1u);

  const auto f = Additive({1, 1, 1, 1});
  const AlgSubResult r = AlgSub(Copies(f, 2), Value(1, 20));
  EXPECT_TRUE(r.state.unsatisfied.empty());
  for (std::size_t i = 0; i < 2; ++i) {
    // mu = 2; 2 / (10 * 21/20) = 4/21.
    EXPECT_GE(f->Evaluate(r.allocation.bundle(i)), Value(4, 21));
  }
  EXPECT_THROW(AlgSub(Copies(f, 2), Value(0)), Error);
  EXPECT_THROW(AlgSub(Copies(f, 2), Value(1)), Error);
}

TEST(AlgSubTest, ZeroShareAgentsStillJoinRoundRobin) {
  const std::vector<ValuationPtr> vals{Additive({5, 0, 0}), Additive({1, 1, 1})};
  const AlgSubResult r = AlgSub(vals);
  EXPECT_TRUE(r.state.removed[0]);
  EXPECT_FALSE(r.state.removed[1]);
  EXPECT_TRUE(r.allocation.complete());
  EXPECT_GE(vals[1]->Evaluate(r.allocation.bundle(1)) * 10 * Value(21, 20), 1);
}

TEST(AlgSubTest, CoverageGuaranteeAndIterationBound) {
  Rng rng(31);
  const Value delta(1, 20);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3, m = n + trial % 6;
    GeneratorSpec spec = DefaultSpec(GeneratorKind::kCoverage, n, m, rng.Next());
    const auto vals = GenerateSubmodular(spec);
    const AlgSubResult r = AlgSub(vals, delta);
    for (std::size_t i = 0; i < n; ++i) {
      const Value mu = testing::ShareOf(*vals[i], n);
      EXPECT_GE(vals[i]->Evaluate(r.allocation.bundle(i)) * 10 * (1 + delta), mu);
      if (mu > 0) {
        const Value total = vals[i]->Evaluate(FullMask(m));
        const std::size_t k = r.state.decays[i];
        if (k >= 2) {
          Value grown = mu;
          for (std::size_t t = 0; t + 2 < k + 0; ++t) grown *= 1 + delta;
          EXPECT_LT(grown, total) << "agent " << i << " decayed " << k << " times";
        }
      }
    }
  }
}

TEST(MultilinearTest, Examples) {
  EXPECT_EQ(MultilinearExact(*Additive({2, 3, 5}), Row({1, 0, 1}) /*indicator*/), 7);
  const std::vector<Value> x{Value(1, 3), Value(1, 4), Value(1, 2)};
  EXPECT_EQ(MultilinearExact(*Additive({2, 3, 5}), x), Value(2, 3) + Value(3, 4) + Value(5, 2));
  EXPECT_EQ(MultilinearExact(*Budget({1, 1}, 1), Half(2)), Value(3, 4));
  const auto g = Budget({3, 2, 2}, 4);
  EXPECT_EQ(MultilinearExact(*g, Row({0, 1, 1})), 4);
  EXPECT_THROW(MultilinearExact(*g, Row({0, 1})), Error);
  EXPECT_THROW(MultilinearExact(*g, Row({0, 2, 1})), Error);
}

TEST(MultilinearTest, MatchesBruteForce) {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const std::vector<Value> x = RandomPoint(rng, m);
    EXPECT_EQ(MultilinearExact(*f, x), testing::BruteMultilinear(*f, x));
  }
}

TEST(MultilinearTest, MonotoneInThePoint) {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 6;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    std::vector<Value> x = RandomPoint(rng, m), y = x;
    for (std::size_t j = 0; j < m; ++j) y[j] = x[j] + (1 - x[j]) * Value(rng.UniformInt(0, 3), 3);
    EXPECT_LE(MultilinearExact(*f, x), MultilinearExact(*f, y));
    const auto ex = MultilinearMonteCarlo(*f, x, 4000, 5);
    const auto ey = MultilinearMonteCarlo(*f, y, 4000, 5);
    EXPECT_LE(ex.estimate, ey.estimate + 4 * (ex.std_error + ey.std_error) + 1e-9);
  }
}

TEST(MonteCarloTest, DeterministicPointIsExact) {
  const auto f = Budget({3, 2, 2}, 4);
  const MonteCarloEstimate e = MultilinearMonteCarlo(*f, Row({1, 0, 1}), 100, 9);
  EXPECT_EQ(e.estimate, 4.0);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.samples, 100u);
  EXPECT_THROW(MultilinearMonteCarlo(*f, Row({1, 0, 1}), 0, 9), Error);
}

TEST(MonteCarloTest, ReproducibleAndWithinErrorBars) {
  Rng rng(34);
  int inside = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t m = 2 + trial % 10;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const std::vector<Value> x = RandomPoint(rng, m);
    const auto a = MultilinearMonteCarlo(*f, x, 2000, 100 + trial);
    const auto b = MultilinearMonteCarlo(*f, x, 2000, 100 + trial);
    EXPECT_EQ(a.estimate, b.estimate);
    if (std::abs(a.estimate - ToDouble(MultilinearExact(*f, x))) <= 4 * a.std_error + 1e-12) {
      ++inside;
    }
  }
  EXPECT_GE(inside, 95);
}

TEST(OrderedMarginalTest, Examples) {
  const auto add = Additive({2, 3, 5});
  const std::vector<Value> x{Value(1, 3), Value(1, 4), Value(1, 2)};
  EXPECT_EQ(ExpectedOrderedMarginal(*add, Bit(0), 0b110, 2, x), 5);
  const auto b = Budget({1, 1}, 1);
  EXPECT_EQ(ExpectedOrderedMarginal(*b, 0, Bit(1), 1, Half(2)), 1);
  EXPECT_EQ(ExpectedOrderedMarginal(*b, Bit(0), Bit(1), 1, Half(2)), 0);
  EXPECT_EQ(ExpectedOrderedMarginal(*b, 0, 0b11, 1, Half(2)), Value(1, 2));
  EXPECT_THROW(ExpectedOrderedMarginal(*b, 0, Bit(0), 1, Half(2)), Error);
}

TEST(OrderedMarginalTest, MatchesBruteForce) {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const GoodMask all = FullMask(m);
    const GoodMask anchor = static_cast<GoodMask>(rng.Next()) & all;
    GoodMask order = (static_cast<GoodMask>(rng.Next()) & all & ~anchor);
    if (order == 0) continue;
    const std::vector<std::size_t> members = GoodsOf(order);
    const std::size_t j = members[rng.Next() % members.size()];
    const std::vector<Value> x = RandomPoint(rng, m);
    EXPECT_EQ(ExpectedOrderedMarginal(*f, anchor, order, j, x),
              testing::BruteOrderedMarginal(*f, anchor, order, j, x));
  }
}

TEST(ProportionalityTest, Examples) {
  const auto unit = Additive({1, 1, 1});
  const ProportionalityReport r = ProportionalityCheck(Copies(unit, 3), {Value(1), Value(1), Value(1)});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.entries[0].uniform_value, 1);

  std::vector<ValuationPtr> gap;
  for (const auto& t : FixtureSubmodularGap()) gap.push_back(t);
  const ProportionalityReport g = ProportionalityCheck(gap, {Value(2), Value(2)});
  EXPECT_TRUE(g.ok);
  EXPECT_EQ(g.entries[0].uniform_value, testing::BruteMultilinear(*gap[0], Half(4)));
  EXPECT_GT(g.entries[0].uniform_value, OneMinusInvEUpper() * 2);
}

TEST(ProportionalityTest, RandomCoverage) {
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2, m = n + trial % 6;
    const auto vals = GenerateSubmodular(DefaultSpec(GeneratorKind::kCoverage, n, m, rng.Next()));
    std::vector<Value> mu;
    for (const auto& f : vals) mu.push_back(testing::ShareOf(*f, n));
    EXPECT_TRUE(ProportionalityCheck(vals, mu).ok);
  }
}

TEST(ConstantsTest, OneMinusInvEBoundIsAnUpperBound) {
  EXPECT_GE(ToDouble(OneMinusInvEUpper()), 1 - std::exp(-1.0));
  EXPECT_LT(ToDouble(OneMinusInvEUpper()) - (1 - std::exp(-1.0)), 1e-4);
}

// The three multilinear identities, each on random small instances.
TEST(MultilinearIdentityTest, MarginalDropIsBounded) {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const GoodMask p = static_cast<GoodMask>(rng.Next()) & FullMask(m);
    const std::size_t g = rng.Next() % m;
    const std::vector<Value> x = RandomPoint(rng, m);
    const Value lhs = MultilinearExact(MarginalValuation(f, p | Bit(g)), x);
    const Value rhs = MultilinearExact(MarginalValuation(f, p), x) - f->Marginal(p, g);
    EXPECT_GE(lhs, rhs);
    EXPECT_EQ(MultilinearExact(MarginalValuation(f, p), x),
              testing::BruteMarginalMultilinear(*f, p, x));
  }
}

TEST(MultilinearIdentityTest, DecomposesIntoOrderedMarginals) {
  Rng rng(38);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const GoodMask h = static_cast<GoodMask>(rng.Next()) & FullMask(m);
    const GoodMask j = static_cast<GoodMask>(rng.Next()) & FullMask(m);
    const std::vector<Value> x = Project(RandomPoint(rng, m), j);
    Value sum = 0;
    for (std::size_t g : GoodsOf(j)) sum += ExpectedOrderedMarginal(*f, h, j, g, x) * x[g];
    EXPECT_EQ(MultilinearExact(MarginalValuation(f, h), x), sum);
  }
}

TEST(MultilinearIdentityTest, OrderedMarginalsShrinkWithTheOrderSet) {
  Rng rng(39);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const ValuationPtr f = RandomFamily(rng, 2, m, trial);
    const GoodMask h = static_cast<GoodMask>(rng.Next()) & FullMask(m);
    const GoodMask big = static_cast<GoodMask>(rng.Next()) & FullMask(m);
    const GoodMask small = big & static_cast<GoodMask>(rng.Next());
    if (small == 0) continue;
    const std::vector<std::size_t> members = GoodsOf(small);
    const std::size_t j = members[rng.Next() % members.size()];
    const std::vector<Value> x = RandomPoint(rng, m);
    EXPECT_GE(ExpectedOrderedMarginal(*f, h, small, j, Project(x, small)),
              ExpectedOrderedMarginal(*f, h, big, j, Project(x, big)));
  }
}

TEST(FractionalAllocationTest, Validates) {
  EXPECT_NO_THROW(FractionalAllocation::Uniform(3, 4));
  EXPECT_EQ(FractionalAllocation::Uniform(4, 2).vector(3)[1], Value(1, 4));
  EXPECT_THROW(FractionalAllocation({Row({1, 0}), Row({1, 0})}), Error);
  EXPECT_THROW(FractionalAllocation({Row({2, 0})}), Error);
  const std::vector<Value> x{Value(1, 2), Value(1, 3), Value(1, 4)};
  EXPECT_EQ(Project(x, 0b101), (std::vector<Value>{Value(1, 2), 0, Value(1, 4)}));
}

}  // namespace
}  // namespace maximin
