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

#include <bit>
#include <mutex>
#include <sstream>

#include "maximin/rng.h"

namespace maximin {

GoodMask MaskOf(std::span<const std::size_t> goods) {
  GoodMask mask = 0;
  for (std::size_t g : goods) {
    if (g >= kMaxOracleGoods) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "good " + std::to_string(g) + " does not fit a 64-bit mask");
    }
    mask |= Bit(g);
  }
  return mask;
}

Bundle GoodsOf(GoodMask mask) {
  Bundle out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

SubmodularValuation::SubmodularValuation(std::size_t ground_size)
    : m_(ground_size) {
  if (m_ > kMaxOracleGoods) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle valuations support at most 64 goods");
  }
}

Value SubmodularValuation::Evaluate(GoodMask set) const {
  if ((set & ~FullMask(m_)) != 0) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "set contains goods outside [0, " + std::to_string(m_) + ")");
  }
  if (!memoize()) return Compute(set);
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(set);
    if (it != cache_.end()) return it->second;
  }
  Value v = Compute(set);
  std::unique_lock lock(mu_);
  cache_.emplace(set, v);
  return v;
}

Value SubmodularValuation::Marginal(GoodMask base, std::size_t good) const {
  if (good >= m_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "good " + std::to_string(good) + " >= " + std::to_string(m_));
  }
  return Evaluate(base | Bit(good)) - Evaluate(base);
}

ExplicitTable::ExplicitTable(std::size_t ground_size, std::vector<Value> table)
    : SubmodularValuation(ground_size), table_(std::move(table)) {
  if (ground_size > 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "explicit tables are limited to 20 goods");
  }
  if (table_.size() != (std::size_t{1} << ground_size)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "explicit table needs 2^m = " +
                    std::to_string(std::size_t{1} << ground_size) +
                    " entries, got " + std::to_string(table_.size()));
  }
  if (table_[0] != 0) {
    throw Error(ErrorCode::kInvalidArgument, "table entry for the empty set must be 0");
  }
  monotone_ = true;
  for (GoodMask s = 0; s < table_.size() && monotone_; ++s) {
    for (std::size_t g = 0; g < ground_size; ++g) {
      if ((s & Bit(g)) == 0 && table_[s | Bit(g)] < table_[s]) {
        monotone_ = false;
        break;
      }
    }
  }
}

std::shared_ptr<ExplicitTable> ExplicitTable::Tabulate(
    const SubmodularValuation& f) {
  const std::size_t m = f.ground_size();
  if (m > 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "explicit tables are limited to 20 goods");
  }
  std::vector<Value> table(std::size_t{1} << m);
  for (GoodMask s = 0; s < table.size(); ++s) table[s] = f.Evaluate(s);
  return std::make_shared<ExplicitTable>(m, std::move(table));
}

WeightedCoverage::WeightedCoverage(std::vector<Value> element_weights,
                                   std::vector<std::vector<std::size_t>> covers)
    : SubmodularValuation(covers.size()),
      weights_(std::move(element_weights)),
      covers_(std::move(covers)) {
  for (const Value& w : weights_) {
    if (w < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coverage element weights must be nonnegative");
    }
  }
  for (auto& cover : covers_) {
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    for (std::size_t e : cover) {
      if (e >= weights_.size()) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "covered element " + std::to_string(e) +
                        " outside universe of " +
                        std::to_string(weights_.size()));
      }
    }
  }
}

Value WeightedCoverage::Compute(GoodMask set) const {
  std::vector<bool> covered(weights_.size(), false);
  Value total = 0;
  for (std::size_t g : GoodsOf(set)) {
    for (std::size_t e : covers_[g]) {
      if (!covered[e]) {
        covered[e] = true;
        total += weights_[e];
      }
    }
  }
  return total;
}

BudgetAdditive::BudgetAdditive(std::vector<Value> weights, Value cap)
    : SubmodularValuation(weights.size()),
      weights_(std::move(weights)),
      cap_(std::move(cap)) {
  if (cap_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "budget cap must be nonnegative");
  }
  for (const Value& w : weights_) {
    if (w < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "budget-additive weights must be nonnegative");
    }
  }
}

Value BudgetAdditive::Compute(GoodMask set) const {
  Value total = 0;
  for (std::size_t g : GoodsOf(set)) total += weights_[g];
  return Min(total, cap_);
}

AdditiveValuation::AdditiveValuation(std::vector<Value> weights)
    : SubmodularValuation(weights.size()), weights_(std::move(weights)) {
  monotone_ = std::all_of(weights_.begin(), weights_.end(),
                          [](const Value& w) { return w >= 0; });
}

Value AdditiveValuation::Compute(GoodMask set) const {
  Value total = 0;
  for (std::size_t g : GoodsOf(set)) total += weights_[g];
  return total;
}

MarginalValuation::MarginalValuation(ValuationPtr base, GoodMask anchor)
    : SubmodularValuation(base->ground_size()),
      base_(std::move(base)),
      anchor_(anchor),
      anchor_value_(base_->Evaluate(anchor)) {}

Value MarginalValuation::Compute(GoodMask set) const {
  return base_->Evaluate(anchor_ | set) - anchor_value_;
}

std::string SubmodularityReport::Describe() const {
  std::ostringstream out;
  switch (violation) {
    case Violation::kNone:
      out << "ok (" << checks << (exhaustive ? " exhaustive" : " sampled")
          << " checks)";
      break;
    case Violation::kNonzeroEmpty:
      out << "v(empty) != 0";
      break;
    case Violation::kMonotonicity:
      out << "monotonicity fails: A=" << a << " good=" << good;
      break;
    case Violation::kSubmodularity:
      out << "submodularity fails: A=" << a << " B=" << b << " good=" << good;
      break;
  }
  return out.str();
}

SubmodularityReport VerifySubmodular(const SubmodularValuation& f,
                                     const VerifyOptions& options) {
  const std::size_t m = f.ground_size();
  SubmodularityReport report;
  report.exhaustive = m <= options.exhaustive_limit;
  auto fail = [&](SubmodularityReport::Violation v, GoodMask a, GoodMask b,
                  std::size_t g) {
    report.ok = false;
    report.violation = v;
    report.a = a;
    report.b = b;
    report.good = g;
    return report;
  };
  if (f.Evaluate(GoodMask{0}) != 0) {
    return fail(SubmodularityReport::Violation::kNonzeroEmpty, 0, 0, 0);
  }

  if (report.exhaustive) {
    const GoodMask full = FullMask(m);
    for (GoodMask a = 0;; ++a) {
      for (std::size_t g = 0; g < m; ++g) {
        if (a & Bit(g)) continue;
        ++report.checks;
        if (f.Evaluate(a | Bit(g)) < f.Evaluate(a)) {
          return fail(SubmodularityReport::Violation::kMonotonicity, a, a, g);
        }
      }
      if (a == full) break;
    }
    // Every B is a superset of A: enumerate the supersets of each A.
    for (GoodMask a = 0;; ++a) {
      const GoodMask rest = full & ~a;
      for (GoodMask extra = rest;; extra = (extra - 1) & rest) {
        const GoodMask b = a | extra;
        for (std::size_t g = 0; g < m; ++g) {
          if (b & Bit(g)) continue;
          ++report.checks;
          if (f.Marginal(a, g) < f.Marginal(b, g)) {
            return fail(SubmodularityReport::Violation::kSubmodularity, a, b,
                        g);
          }
        }
        if (extra == 0) break;
      }
      if (a == full) break;
    }
    return report;
  }

  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    GoodMask a = 0, b = 0;
    for (std::size_t g = 0; g < m; ++g) {
      const auto r = rng.UniformInt(0, 2);  // 0: outside, 1: B only, 2: A and B
      if (r >= 1) b |= Bit(g);
      if (r == 2) a |= Bit(g);
    }
    if (b == FullMask(m)) continue;
    const GoodMask outside = FullMask(m) & ~b;
    const std::vector<std::size_t> candidates = GoodsOf(outside);
    const std::size_t g = candidates[static_cast<std::size_t>(
        rng.UniformInt(0, static_cast<std::int64_t>(candidates.size()) - 1))];
    report.checks += 2;
    if (f.Evaluate(b | Bit(g)) < f.Evaluate(b)) {
      return fail(SubmodularityReport::Violation::kMonotonicity, b, b, g);
    }
    if (f.Marginal(a, g) < f.Marginal(b, g)) {
      return fail(SubmodularityReport::Violation::kSubmodularity, a, b, g);
    }
  }
  return report;
}

FractionalAllocation::FractionalAllocation(
    std::vector<std::vector<Value>> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "fractional allocation needs at least one agent");
  }
  goods_ = vectors_.front().size();
  std::vector<Value> column(goods_, Value(0));
  for (const auto& x : vectors_) {
    if (x.size() != goods_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "fractional vectors must have equal length");
    }
    for (std::size_t j = 0; j < goods_; ++j) {
      if (x[j] < 0 || x[j] > 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "fractional entries must lie in [0, 1]");
      }
      column[j] += x[j];
    }
  }
  for (std::size_t j = 0; j < goods_; ++j) {
    if (column[j] > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "good " + std::to_string(j) + " has total mass above 1");
    }
  }
}

FractionalAllocation FractionalAllocation::Uniform(std::size_t agents,
                                                   std::size_t goods) {
  if (agents == 0) {
    throw Error(ErrorCode::kInvalidArgument, "uniform allocation needs agents");
  }
  const Value share(1, static_cast<unsigned long>(agents));
  return FractionalAllocation(std::vector<std::vector<Value>>(
      agents, std::vector<Value>(goods, share)));
}

const std::vector<Value>& FractionalAllocation::vector(std::size_t agent) const {
  CheckAgent(agent, vectors_.size());
  return vectors_[agent];
}

std::vector<Value> Project(const std::vector<Value>& x, GoodMask support) {
  std::vector<Value> out(x.size(), Value(0));
  for (std::size_t j = 0; j < x.size() && j < kMaxOracleGoods; ++j) {
    if (support & Bit(j)) out[j] = x[j];
  }
  return out;
}

}  // namespace maximin
