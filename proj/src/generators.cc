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

#include "maximin/generators.h"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "maximin/rng.h"

namespace maximin {
namespace {

constexpr std::array<std::pair<GeneratorKind, const char*>, 6> kKindNames{{
    {GeneratorKind::kUniformAdditive, "uniform-additive"},
    {GeneratorKind::kOrderedAdditive, "ordered-additive"},
    {GeneratorKind::kChores, "chores"},
    {GeneratorKind::kCoverage, "coverage"},
    {GeneratorKind::kBudgetAdditive, "budget-additive"},
    {GeneratorKind::kExplicit, "explicit"},
}};

void Validate(const GeneratorSpec& spec) {
  if (spec.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "generator needs n >= 1");
  }
  if (spec.lo > spec.hi) {
    throw Error(ErrorCode::kInvalidArgument, "empty value range");
  }
  if (spec.kind == GeneratorKind::kChores ? spec.hi > 0 : spec.lo < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "value range has the wrong sign for " +
                    GeneratorKindName(spec.kind));
  }
  if (IsSubmodularKind(spec.kind) && spec.m > 20) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle valuations are limited to 20 goods");
  }
  if (spec.distinct &&
      static_cast<std::uint64_t>(spec.hi - spec.lo) + 1 < spec.m) {
    throw Error(ErrorCode::kInvalidArgument,
                "range too small for distinct values");
  }
}

std::vector<Value> DrawRow(const GeneratorSpec& spec, Rng& rng) {
  std::vector<std::int64_t> raw;
  raw.reserve(spec.m);
  while (raw.size() < spec.m) {
    const std::int64_t v = rng.UniformInt(spec.lo, spec.hi);
    if (spec.distinct && std::find(raw.begin(), raw.end(), v) != raw.end()) {
      continue;
    }
    raw.push_back(v);
  }
  if (spec.kind == GeneratorKind::kOrderedAdditive) {
    std::sort(raw.begin(), raw.end(), std::greater<>());
  }
  return std::vector<Value>(raw.begin(), raw.end());
}

ValuationPtr DrawCoverage(const GeneratorSpec& spec, Rng& rng) {
  const std::size_t universe = std::max<std::size_t>(
      1, spec.elements != 0 ? spec.elements : 2 * spec.m);
  std::vector<Value> weights;
  for (std::size_t e = 0; e < universe; ++e) {
    weights.emplace_back(rng.UniformInt(spec.lo, spec.hi));
  }
  std::vector<std::vector<std::size_t>> covers(spec.m);
  for (auto& cover : covers) {
    const auto count = static_cast<std::size_t>(rng.UniformInt(
        1, static_cast<std::int64_t>(std::min<std::size_t>(3, universe))));
    while (cover.size() < count) {
      const auto e = static_cast<std::size_t>(
          rng.UniformInt(0, static_cast<std::int64_t>(universe) - 1));
      if (std::find(cover.begin(), cover.end(), e) == cover.end()) {
        cover.push_back(e);
      }
    }
    std::sort(cover.begin(), cover.end());
  }
  return std::make_shared<WeightedCoverage>(std::move(weights),
                                            std::move(covers));
}

ValuationPtr DrawBudgetAdditive(const GeneratorSpec& spec, Rng& rng) {
  std::vector<Value> weights;
  std::int64_t total = 0;
  for (std::size_t g = 0; g < spec.m; ++g) {
    const std::int64_t w = rng.UniformInt(spec.lo, spec.hi);
    total += w;
    weights.emplace_back(w);
  }
  // A cap between the fair share and the total keeps it binding sometimes.
  const std::int64_t floor_share = total / static_cast<std::int64_t>(spec.n);
  const Value cap(rng.UniformInt(floor_share, total));
  return std::make_shared<BudgetAdditive>(std::move(weights), cap);
}

// Pointwise sum of two set functions, used only to build explicit tables.
class SumOf final : public SubmodularValuation {
 public:
  SumOf(ValuationPtr a, ValuationPtr b)
      : SubmodularValuation(a->ground_size()), a_(std::move(a)), b_(std::move(b)) {}
  std::string family() const override { return "sum"; }

 protected:
  Value Compute(GoodMask set) const override {
    return a_->Evaluate(set) + b_->Evaluate(set);
  }
  bool memoize() const override { return false; }

 private:
  ValuationPtr a_, b_;
};

ValuationPtr DrawOne(const GeneratorSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case GeneratorKind::kCoverage:
      return DrawCoverage(spec, rng);
    case GeneratorKind::kBudgetAdditive:
      return DrawBudgetAdditive(spec, rng);
    case GeneratorKind::kExplicit: {
      ValuationPtr cover = DrawCoverage(spec, rng);
      ValuationPtr budget = DrawBudgetAdditive(spec, rng);
      return ExplicitTable::Tabulate(SumOf(cover, budget));
    }
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  GeneratorKindName(spec.kind) + " is not an oracle family");
  }
}

// Singletons 1, strong pairs 2, other pairs 3/2. With those pairs,
// submodularity forces every larger set down to 2: adding b2 to {a1, b1}
// may gain at most what it gains on {a1}, namely 1/2.
std::shared_ptr<const ExplicitTable> GapTable(
    const std::array<std::array<std::size_t, 2>, 2>& strong_pairs) {
  std::vector<Value> table(16);
  for (GoodMask s = 0; s < 16; ++s) {
    switch (std::popcount(s)) {
      case 0: table[s] = 0; break;
      case 1: table[s] = 1; break;
      case 2: {
        bool strong = false;
        for (const auto& p : strong_pairs) strong |= s == (Bit(p[0]) | Bit(p[1]));
        table[s] = strong ? Value(2) : Value(3, 2);
        break;
      }
      default: table[s] = 2; break;
    }
  }
  return std::make_shared<ExplicitTable>(4, std::move(table));
}

}  // namespace

std::string GeneratorKindName(GeneratorKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GeneratorKind ParseGeneratorKind(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw Error(ErrorCode::kParse, "unknown generator kind '" + name + "'");
}

bool IsSubmodularKind(GeneratorKind kind) {
  return kind == GeneratorKind::kCoverage ||
         kind == GeneratorKind::kBudgetAdditive ||
         kind == GeneratorKind::kExplicit;
}

GeneratorSpec DefaultSpec(GeneratorKind kind, std::size_t n, std::size_t m,
                          std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.m = m;
  spec.seed = seed;
  if (kind == GeneratorKind::kChores) {
    spec.lo = -100;
    spec.hi = 0;
  }
  return spec;
}

AdditiveInstance GenerateAdditive(const GeneratorSpec& spec) {
  Validate(spec);
  if (IsSubmodularKind(spec.kind)) {
    throw Error(ErrorCode::kInvalidArgument,
                GeneratorKindName(spec.kind) + " is not an additive kind");
  }
  Rng rng(spec.seed);
  std::vector<std::vector<Value>> values;
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (spec.identical && i > 0) {
      values.push_back(values.front());
    } else {
      values.push_back(DrawRow(spec, rng));
    }
  }
  return AdditiveInstance(std::move(values), spec.kind == GeneratorKind::kChores
                                                 ? ItemKind::kChores
                                                 : ItemKind::kGoods);
}

std::vector<ValuationPtr> GenerateSubmodular(const GeneratorSpec& spec) {
  Validate(spec);
  Rng rng(spec.seed);
  std::vector<ValuationPtr> out;
  for (std::size_t i = 0; i < spec.n; ++i) {
    out.push_back(spec.identical && i > 0 ? out.front() : DrawOne(spec, rng));
  }
  return out;
}

Generated Generate(const GeneratorSpec& spec) {
  if (IsSubmodularKind(spec.kind)) return GenerateSubmodular(spec);
  return GenerateAdditive(spec);
}

Ef1Fixture FixtureEf1NotMms(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "fixture needs n >= 2");
  }
  std::vector<Value> row(n, Value(1));
  row.resize(2 * n - 1, Value(static_cast<long>(n)));
  std::vector<Bundle> bundles(n);
  bundles[0] = {0};
  for (std::size_t k = 1; k < n; ++k) bundles[k] = {k, n + k - 1};
  return {AdditiveInstance(std::vector<std::vector<Value>>(n, row),
                           ItemKind::kGoods),
          Allocation(std::move(bundles), 2 * n - 1)};
}

std::vector<std::shared_ptr<const ExplicitTable>> FixtureSubmodularGap() {
  // a1 = 0, a2 = 1, b1 = 2, b2 = 3.
  return {GapTable({{{0, 1}, {2, 3}}}), GapTable({{{0, 2}, {1, 3}}})};
}

}  // namespace maximin
