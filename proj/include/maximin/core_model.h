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

#ifndef MAXIMIN_CORE_MODEL_H_
#define MAXIMIN_CORE_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maximin/value.h"

namespace maximin {

using Bundle = std::vector<std::size_t>;  // sorted good indices

enum class ItemKind { kGoods, kChores };

// Agents x items matrix of exact values. Goods carry nonnegative entries,
// chores nonpositive ones.
class AdditiveInstance {
 public:
  AdditiveInstance(std::vector<std::vector<Value>> values, ItemKind kind);

  std::size_t agents() const { return values_.size(); }
  std::size_t items() const { return items_; }
  ItemKind kind() const { return kind_; }

  const Value& value(std::size_t agent, std::size_t item) const;
  std::span<const Value> row(std::size_t agent) const;
  const std::vector<std::vector<Value>>& values() const { return values_; }

  // v_i([m]).
  Value total(std::size_t agent) const;

  friend bool operator==(const AdditiveInstance&,
                         const AdditiveInstance&) = default;

 private:
  std::vector<std::vector<Value>> values_;
  std::size_t items_ = 0;
  ItemKind kind_;
};

// n pairwise-disjoint bundles over a universe of `universe` goods. Goods that
// appear in no bundle are unallocated.
class Allocation {
 public:
  Allocation(std::size_t agents, std::size_t universe);
  Allocation(std::vector<Bundle> bundles, std::size_t universe);

  std::size_t agents() const { return bundles_.size(); }
  std::size_t universe() const { return universe_; }
  const Bundle& bundle(std::size_t agent) const;
  const std::vector<Bundle>& bundles() const { return bundles_; }

  bool complete() const;
  std::size_t allocated_count() const;
  std::optional<std::size_t> owner(std::size_t good) const;

  void Assign(std::size_t agent, std::size_t good);
  // cycle = (i_1, ..., i_l): agent i_a receives the bundle of i_{a+1}, and
  // i_l receives the bundle of i_1.
  void Rotate(std::span<const std::size_t> cycle);

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
  std::size_t universe_;
};

struct MmsCertificate {
  std::size_t agent = 0;
  Value value;
  Allocation witness;
};

Value BundleValue(const AdditiveInstance& instance, std::size_t agent,
                  std::span<const std::size_t> bundle);

// Per-agent value of the agent's own bundle.
std::vector<Value> OwnValues(const AdditiveInstance& instance,
                             const Allocation& allocation);

bool Envies(const AdditiveInstance& instance, const Allocation& allocation,
            std::size_t i, std::size_t j);

// An empty rival bundle only requires v_i(A_i) >= 0 under both predicates,
// so IsEfx implies IsEf1 for goods and chores alike.
bool IsEf1(const AdditiveInstance& instance, const Allocation& allocation);
bool IsEfx(const AdditiveInstance& instance, const Allocation& allocation);

void CheckAgent(std::size_t agent, std::size_t agents);
void CheckCompatible(const AdditiveInstance& instance,
                     const Allocation& allocation);

}  // namespace maximin

#endif  // MAXIMIN_CORE_MODEL_H_
