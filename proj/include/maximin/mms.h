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

#ifndef MAXIMIN_MMS_H_
#define MAXIMIN_MMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/submodular.h"

namespace maximin {

// Exact maximin shares are found by enumerating assignments of goods to
// bundle labels in canonical form (each good joins an existing label or opens
// the next one), i.e. set partitions into at most n blocks. The budget caps
// the number of such partitions, sum_{k<=n} S(m, k).
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// sum_{k=1..min(n,m)} S(m, k), saturating at UINT64_MAX. 1 when m = 0.
std::uint64_t CanonicalPartitionCount(std::size_t m, std::size_t n);

// Exact n-maximin share of one agent of an additive instance (goods or
// chores), with the lexicographically least maximizing labelling as witness.
MmsCertificate MmsExactAdditive(const AdditiveInstance& instance,
                                std::size_t agent,
                                std::uint64_t budget = kDefaultOracleBudget);

// Same for a single additive row split among n bundles.
MmsCertificate MmsExactRow(const std::vector<Value>& row, std::size_t n,
                           std::uint64_t budget = kDefaultOracleBudget);

// Exact n-maximin share of an oracle valuation. The search prunes with
// f(bundle + remaining) only when f reports itself monotone.
MmsCertificate MmsExactSubmodular(const SubmodularValuation& f, std::size_t n,
                                  std::uint64_t budget = kDefaultOracleBudget);

// Universe of (good, slot) pairs; a set is independent iff it uses every good
// at most once, i.e. it is a partial assignment of goods to slots.
struct SlotPair {
  std::size_t good = 0;
  std::size_t slot = 0;
  friend bool operator==(const SlotPair&, const SlotPair&) = default;
};
using IndependentSet = std::vector<SlotPair>;

class PartitionMatroid {
 public:
  PartitionMatroid(std::vector<std::size_t> goods, std::size_t slots);

  const std::vector<std::size_t>& goods() const { return goods_; }
  std::size_t slots() const { return slots_; }
  std::size_t universe_size() const { return goods_.size() * slots_; }
  // Element e <-> (goods()[e / slots], e % slots).
  SlotPair element(std::size_t e) const;

  bool Contains(const SlotPair& p) const;
  bool IsIndependent(const IndependentSet& set) const;

 private:
  std::vector<std::size_t> goods_;
  std::size_t slots_;
};

// g(S) = sum_k min(cap, v(S_k)) where S_k holds the goods placed in slot k.
// Nonnegative, monotone and submodular over the (good, slot) universe when v
// is monotone submodular.
class SlotObjective {
 public:
  SlotObjective(const SubmodularValuation& valuation, Value cap,
                std::size_t slots);

  Value operator()(const IndependentSet& set) const;
  Value SlotValue(GoodMask goods) const;
  std::vector<GoodMask> SlotMasks(const IndependentSet& set) const;
  // slots * cap: the largest value g can take.
  Value Ceiling() const { return cap_ * static_cast<unsigned long>(slots_); }

  const SubmodularValuation& valuation() const { return *valuation_; }
  const Value& cap() const { return cap_; }
  std::size_t slots() const { return slots_; }

 private:
  const SubmodularValuation* valuation_;
  Value cap_;
  std::size_t slots_;
};

using MatroidObjective = std::function<Value(const IndependentSet&)>;

// Lazy greedy: repeatedly adds the feasible element with the largest marginal
// gain (ties to the lowest element index) until the set is a basis. At least
// half the optimum for monotone submodular objectives.
IndependentSet GreedyMatroidMax(const MatroidObjective& objective,
                                const PartitionMatroid& matroid);

// Exact maximizer over every partial assignment, (slots + 1)^goods of them.
IndependentSet ExhaustiveMatroidMax(const MatroidObjective& objective,
                                    const PartitionMatroid& matroid,
                                    std::uint64_t budget = 10'000'000);

// Exact maximizer of a slot objective. Slots are interchangeable and v is
// monotone, so only complete assignments in canonical slot order are
// visited, with f(slot + unplaced goods) as a pruning bound.
IndependentSet ExhaustiveSlotMax(const SlotObjective& objective,
                                 const PartitionMatroid& matroid,
                                 std::uint64_t budget = 10'000'000);

class MatroidSolver {
 public:
  virtual ~MatroidSolver() = default;
  virtual IndependentSet Maximize(const SlotObjective& objective,
                                  const PartitionMatroid& matroid) const = 0;
  // Guaranteed fraction of the optimum.
  virtual Value factor() const = 0;
  virtual std::string name() const = 0;
};

class ExhaustiveMatroidSolver final : public MatroidSolver {
 public:
  explicit ExhaustiveMatroidSolver(std::uint64_t budget = 10'000'000)
      : budget_(budget) {}
  IndependentSet Maximize(const SlotObjective& objective,
                          const PartitionMatroid& matroid) const override {
    return ExhaustiveSlotMax(objective, matroid, budget_);
  }
  Value factor() const override { return 1; }
  std::string name() const override { return "exhaustive"; }

 private:
  std::uint64_t budget_;
};

class GreedyMatroidSolver final : public MatroidSolver {
 public:
  IndependentSet Maximize(const SlotObjective& objective,
                          const PartitionMatroid& matroid) const override;
  Value factor() const override { return Value(1, 2); }
  std::string name() const override { return "greedy"; }
};

// Moves goods of `bundle` (lowest index first) into A until v(A) >= 4 tau / 9.
std::pair<GoodMask, GoodMask> SplitBundle(const SubmodularValuation& f,
                                          GoodMask bundle, const Value& tau);

struct ThresholdTest {
  Value tau;
  std::size_t high_goods = 0;  // |H|, goods with v({j}) >= tau / 9
  Value slot_value;            // g(I), when |H| < n
  Value required;              // (8/9) c (n - |H|) tau, when |H| < n
  bool rule_passed = false;    // the g(I) >= required test (or |H| >= n)
  bool accepted = false;       // rule passed and every bundle >= tau / 9
  std::optional<Allocation> partition;
};

// One threshold probe: H-seeded singletons, then a 2(n - |H|)-slot
// assignment of the other goods, merged down to n - |H| bundles by keeping
// the n - |H| - 1 most valuable slots and pooling the rest.
ThresholdTest TestThreshold(const SubmodularValuation& f, std::size_t n,
                            const Value& tau, const MatroidSolver& solver);

struct ApproxMmsResult {
  Allocation partition;
  Value threshold;   // largest accepted tau; every bundle >= threshold / 9
  bool certified = false;  // solver factor >= 1 - 1/e: threshold >= mu/(1+eps)
  std::vector<ThresholdTest> trail;
};

// Binary search on tau over [0, f([m])] down to multiplicative width eps.
ApproxMmsResult MmsApproxSubmodular(const SubmodularValuation& f,
                                    std::size_t n, const MatroidSolver& solver,
                                    const Value& epsilon = Value(1, 100));

}  // namespace maximin

#endif  // MAXIMIN_MMS_H_
