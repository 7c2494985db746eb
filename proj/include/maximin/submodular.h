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

#ifndef MAXIMIN_SUBMODULAR_H_
#define MAXIMIN_SUBMODULAR_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/value.h"

namespace maximin {

// Bit k set <=> good k in the set. Oracle-based valuations are limited to
// 64 goods.
using GoodMask = std::uint64_t;

inline constexpr std::size_t kMaxOracleGoods = 64;

GoodMask MaskOf(std::span<const std::size_t> goods);
Bundle GoodsOf(GoodMask mask);
inline GoodMask FullMask(std::size_t m) {
  return m >= 64 ? ~GoodMask{0} : (GoodMask{1} << m) - 1;
}
inline GoodMask Bit(std::size_t g) { return GoodMask{1} << g; }

// Oracle access to a set function over goods [0, m). Evaluations are
// memoized; concurrent queries are safe.
class SubmodularValuation {
 public:
  explicit SubmodularValuation(std::size_t ground_size);
  virtual ~SubmodularValuation() = default;

  SubmodularValuation(const SubmodularValuation&) = delete;
  SubmodularValuation& operator=(const SubmodularValuation&) = delete;

  std::size_t ground_size() const { return m_; }

  Value Evaluate(GoodMask set) const;
  Value Evaluate(std::span<const std::size_t> goods) const {
    return Evaluate(MaskOf(goods));
  }
  Value Singleton(std::size_t good) const { return Evaluate(Bit(good)); }
  // f(base + g) - f(base).
  Value Marginal(GoodMask base, std::size_t good) const;

  // Whether the function is known to be monotone non-decreasing; the exact
  // oracles only prune their search when this holds.
  virtual bool monotone() const { return true; }
  virtual std::string family() const = 0;

 protected:
  virtual Value Compute(GoodMask set) const = 0;
  virtual bool memoize() const { return true; }

 private:
  std::size_t m_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<GoodMask, Value> cache_;
};

using ValuationPtr = std::shared_ptr<const SubmodularValuation>;

// All 2^m values, indexed by subset mask. m <= 20.
class ExplicitTable final : public SubmodularValuation {
 public:
  ExplicitTable(std::size_t ground_size, std::vector<Value> table);

  const std::vector<Value>& table() const { return table_; }
  bool monotone() const override { return monotone_; }
  std::string family() const override { return "explicit"; }

  // Tabulates any oracle (m <= 20).
  static std::shared_ptr<ExplicitTable> Tabulate(const SubmodularValuation& f);

 protected:
  Value Compute(GoodMask set) const override { return table_[set]; }
  bool memoize() const override { return false; }

 private:
  std::vector<Value> table_;
  bool monotone_;
};

// Goods cover elements of a weighted universe; v(S) = weight of the union.
class WeightedCoverage final : public SubmodularValuation {
 public:
  WeightedCoverage(std::vector<Value> element_weights,
                   std::vector<std::vector<std::size_t>> covers);

  const std::vector<Value>& element_weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& covers() const {
    return covers_;
  }
  std::string family() const override { return "coverage"; }

 protected:
  Value Compute(GoodMask set) const override;

 private:
  std::vector<Value> weights_;
  std::vector<std::vector<std::size_t>> covers_;
};

// v(S) = min(cap, sum of weights over S).
class BudgetAdditive final : public SubmodularValuation {
 public:
  BudgetAdditive(std::vector<Value> weights, Value cap);

  const std::vector<Value>& weights() const { return weights_; }
  const Value& cap() const { return cap_; }
  std::string family() const override { return "budget-additive"; }

 protected:
  Value Compute(GoodMask set) const override;

 private:
  std::vector<Value> weights_;
  Value cap_;
};

// v(S) = sum of weights over S. Weights may be negative (chores).
class AdditiveValuation final : public SubmodularValuation {
 public:
  explicit AdditiveValuation(std::vector<Value> weights);

  const std::vector<Value>& weights() const { return weights_; }
  bool monotone() const override { return monotone_; }
  std::string family() const override { return "additive"; }

 protected:
  Value Compute(GoodMask set) const override;
  bool memoize() const override { return false; }

 private:
  std::vector<Value> weights_;
  bool monotone_;
};

// f_H(S) = f(H + S) - f(H).
class MarginalValuation final : public SubmodularValuation {
 public:
  MarginalValuation(ValuationPtr base, GoodMask anchor);

  const ValuationPtr& base() const { return base_; }
  GoodMask anchor() const { return anchor_; }
  bool monotone() const override { return base_->monotone(); }
  std::string family() const override { return "marginal"; }

 protected:
  Value Compute(GoodMask set) const override;
  bool memoize() const override { return false; }

 private:
  ValuationPtr base_;
  GoodMask anchor_;
  Value anchor_value_;
};

struct SubmodularityReport {
  enum class Violation { kNone, kNonzeroEmpty, kMonotonicity, kSubmodularity };

  bool ok = true;
  Violation violation = Violation::kNone;
  // Monotonicity: f(A) > f(A + g). Submodularity: A subset of B, g outside
  // B, and f_A(g) < f_B(g).
  GoodMask a = 0;
  GoodMask b = 0;
  std::size_t good = 0;
  bool exhaustive = true;
  std::uint64_t checks = 0;

  std::string Describe() const;
};

struct VerifyOptions {
  std::size_t exhaustive_limit = 10;  // largest m checked exhaustively
  std::size_t samples = 20000;        // sampled mode
  std::uint64_t seed = 1;
};

// Checks v(empty) = 0, monotonicity and diminishing returns. Exhaustive over
// every nested pair A subset B for m <= exhaustive_limit, sampled otherwise.
SubmodularityReport VerifySubmodular(const SubmodularValuation& f,
                                     const VerifyOptions& options = {});

// n probability vectors over the goods, each good's total mass at most 1.
class FractionalAllocation {
 public:
  FractionalAllocation(std::vector<std::vector<Value>> vectors);

  static FractionalAllocation Uniform(std::size_t agents, std::size_t goods);

  std::size_t agents() const { return vectors_.size(); }
  std::size_t goods() const { return goods_; }
  const std::vector<Value>& vector(std::size_t agent) const;

 private:
  std::vector<std::vector<Value>> vectors_;
  std::size_t goods_;
};

// x^S: x on S, zero elsewhere.
std::vector<Value> Project(const std::vector<Value>& x, GoodMask support);

}  // namespace maximin

#endif  // MAXIMIN_SUBMODULAR_H_
