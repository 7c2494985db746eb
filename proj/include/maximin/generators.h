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

#ifndef MAXIMIN_GENERATORS_H_
#define MAXIMIN_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/submodular.h"

namespace maximin {

enum class GeneratorKind {
  kUniformAdditive,
  kOrderedAdditive,
  kChores,
  kCoverage,
  kBudgetAdditive,
  kExplicit,
};

// "uniform-additive", "ordered-additive", "chores", "coverage",
// "budget-additive", "explicit".
std::string GeneratorKindName(GeneratorKind kind);
GeneratorKind ParseGeneratorKind(const std::string& name);
bool IsSubmodularKind(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniformAdditive;
  std::size_t n = 2;
  std::size_t m = 4;
  // Integer value range. Chores draw from [lo, hi] with hi <= 0; every other
  // kind needs lo >= 0. Coverage draws element weights from it.
  std::int64_t lo = 0;
  std::int64_t hi = 100;
  std::uint64_t seed = 1;
  bool identical = false;     // every agent gets the same row / function
  bool distinct = false;      // ordered-additive: strictly decreasing rows
  std::size_t elements = 0;   // coverage universe size; 0 means 2m
};

// Default value range of a kind: 0..100, or -100..0 for chores.
GeneratorSpec DefaultSpec(GeneratorKind kind, std::size_t n, std::size_t m,
                          std::uint64_t seed);

using Generated = std::variant<AdditiveInstance, std::vector<ValuationPtr>>;

// Deterministic in the spec: the same spec always yields the same instance.
Generated Generate(const GeneratorSpec& spec);
AdditiveInstance GenerateAdditive(const GeneratorSpec& spec);
std::vector<ValuationPtr> GenerateSubmodular(const GeneratorSpec& spec);

// n unit goods followed by n-1 goods worth n, identical valuations, with
// the EF1 allocation {g_0}, {g_1, g_n}, ..., {g_{n-1}, g_{2n-2}}. Agent 0
// gets 1 while its maximin share is n.
struct Ef1Fixture {
  AdditiveInstance instance;
  Allocation allocation;
};
Ef1Fixture FixtureEf1NotMms(std::size_t n);

// Two agents, goods a1, a2, b1, b2 (indices 0..3). Singletons are worth 1,
// any set of three or more goods 2. Agent 0 values {a1, a2} and {b1, b2} at
// 2, agent 1 values {a1, b1} and {a2, b2} at 2; every other pair is 3/2.
// No allocation gives both agents more than 3/4 of their share.
std::vector<std::shared_ptr<const ExplicitTable>> FixtureSubmodularGap();

}  // namespace maximin

#endif  // MAXIMIN_GENERATORS_H_
