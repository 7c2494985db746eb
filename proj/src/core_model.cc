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

#include "maximin/core_model.h"

#include <algorithm>
#include <string>

namespace maximin {

AdditiveInstance::AdditiveInstance(std::vector<std::vector<Value>> values,
                                   ItemKind kind)
    : values_(std::move(values)), kind_(kind) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "instance needs at least 1 agent");
  }
  items_ = values_.front().size();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != items_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(values_[i].size()) + " entries, expected " +
                      std::to_string(items_));
    }
    for (std::size_t j = 0; j < items_; ++j) {
      const Value& v = values_[i][j];
      if (kind_ == ItemKind::kGoods && v < 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "negative value for a good at (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
      }
      if (kind_ == ItemKind::kChores && v > 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "positive value for a chore at (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
      }
    }
  }
}

const Value& AdditiveInstance::value(std::size_t agent,
                                     std::size_t item) const {
  CheckAgent(agent, agents());
  if (item >= items_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "item " + std::to_string(item) + " >= " +
                    std::to_string(items_));
  }
  return values_[agent][item];
}

std::span<const Value> AdditiveInstance::row(std::size_t agent) const {
  CheckAgent(agent, agents());
  return values_[agent];
}

Value AdditiveInstance::total(std::size_t agent) const {
  CheckAgent(agent, agents());
  return Sum(values_[agent]);
}

Allocation::Allocation(std::size_t agents, std::size_t universe)
    : bundles_(agents), universe_(universe) {}

Allocation::Allocation(std::vector<Bundle> bundles, std::size_t universe)
    : bundles_(std::move(bundles)), universe_(universe) {
  std::vector<bool> seen(universe_, false);
  for (Bundle& b : bundles_) {
    std::sort(b.begin(), b.end());
    for (std::size_t g : b) {
      if (g >= universe_) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "good " + std::to_string(g) + " outside universe of " +
                        std::to_string(universe_));
      }
      if (seen[g]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "good " + std::to_string(g) + " appears in two bundles");
      }
      seen[g] = true;
    }
  }
}

const Bundle& Allocation::bundle(std::size_t agent) const {
  CheckAgent(agent, agents());
  return bundles_[agent];
}

std::size_t Allocation::allocated_count() const {
  std::size_t count = 0;
  for (const Bundle& b : bundles_) count += b.size();
  return count;
}

bool Allocation::complete() const { return allocated_count() == universe_; }

std::optional<std::size_t> Allocation::owner(std::size_t good) const {
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (std::binary_search(bundles_[i].begin(), bundles_[i].end(), good)) {
      return i;
    }
  }
  return std::nullopt;
}

void Allocation::Assign(std::size_t agent, std::size_t good) {
  CheckAgent(agent, agents());
  if (good >= universe_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "good " + std::to_string(good) + " outside universe");
  }
  if (owner(good).has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                "good " + std::to_string(good) + " already allocated");
  }
  Bundle& b = bundles_[agent];
  b.insert(std::upper_bound(b.begin(), b.end(), good), good);
}

void Allocation::Rotate(std::span<const std::size_t> cycle) {
  if (cycle.size() < 2) return;
  for (std::size_t a : cycle) CheckAgent(a, agents());
  Bundle first = std::move(bundles_[cycle[0]]);
  for (std::size_t a = 0; a + 1 < cycle.size(); ++a) {
    bundles_[cycle[a]] = std::move(bundles_[cycle[a + 1]]);
  }
  bundles_[cycle.back()] = std::move(first);
}

void CheckAgent(std::size_t agent, std::size_t agents) {
  if (agent >= agents) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "agent " + std::to_string(agent) + " >= " +
                    std::to_string(agents));
  }
}

void CheckCompatible(const AdditiveInstance& instance,
                     const Allocation& allocation) {
  if (instance.agents() != allocation.agents() ||
      instance.items() != allocation.universe()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "allocation is " + std::to_string(allocation.agents()) + "x" +
                    std::to_string(allocation.universe()) +
                    ", instance is " + std::to_string(instance.agents()) +
                    "x" + std::to_string(instance.items()));
  }
}

Value BundleValue(const AdditiveInstance& instance, std::size_t agent,
                  std::span<const std::size_t> bundle) {
  CheckAgent(agent, instance.agents());
  const auto row = instance.row(agent);
  Value total = 0;
  for (std::size_t g : bundle) {
    if (g >= row.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "good " + std::to_string(g) + " >= " +
                      std::to_string(row.size()));
    }
    total += row[g];
  }
  return total;
}

std::vector<Value> OwnValues(const AdditiveInstance& instance,
                             const Allocation& allocation) {
  CheckCompatible(instance, allocation);
  std::vector<Value> out;
  out.reserve(instance.agents());
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    out.push_back(BundleValue(instance, i, allocation.bundle(i)));
  }
  return out;
}

bool Envies(const AdditiveInstance& instance, const Allocation& allocation,
            std::size_t i, std::size_t j) {
  CheckCompatible(instance, allocation);
  CheckAgent(i, instance.agents());
  CheckAgent(j, instance.agents());
  if (i == j) {
    throw Error(ErrorCode::kInvalidArgument, "an agent cannot envy itself");
  }
  return BundleValue(instance, i, allocation.bundle(i)) <
         BundleValue(instance, i, allocation.bundle(j));
}

namespace {

// Shared body of EF1/EFX: `pick_removed` selects which good's value is
// subtracted from the rival bundle (the most valuable for EF1, the least
// valuable for EFX).
template <typename Pick>
bool EnvyFreeUpTo(const AdditiveInstance& instance,
                  const Allocation& allocation, Pick pick_removed) {
  CheckCompatible(instance, allocation);
  const std::size_t n = instance.agents();
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = instance.row(i);
    const Value own = BundleValue(instance, i, allocation.bundle(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bundle& rival = allocation.bundle(j);
      if (rival.empty()) {
        if (own < 0) return false;
        continue;
      }
      Value removed = row[rival.front()];
      for (std::size_t g : rival) removed = pick_removed(removed, row[g]);
      if (own < BundleValue(instance, i, rival) - removed) return false;
    }
  }
  return true;
}

}  // namespace

bool IsEf1(const AdditiveInstance& instance, const Allocation& allocation) {
  return EnvyFreeUpTo(instance, allocation,
                      [](const Value& a, const Value& b) { return Max(a, b); });
}

bool IsEfx(const AdditiveInstance& instance, const Allocation& allocation) {
  return EnvyFreeUpTo(instance, allocation,
                      [](const Value& a, const Value& b) { return Min(a, b); });
}

}  // namespace maximin
