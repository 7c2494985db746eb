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

#include "maximin/ordered_reduction.h"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "maximin/mms.h"

namespace maximin {

std::vector<std::size_t> OrderedReduction::InversePermutation(
    std::size_t agent) const {
  CheckAgent(agent, perms.size());
  const auto& perm = perms[agent];
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) inverse[perm[pos]] = pos;
  return inverse;
}

OrderedReduction ToOrdered(const AdditiveInstance& instance) {
  const bool goods = instance.kind() == ItemKind::kGoods;
  std::vector<std::vector<Value>> rows;
  std::vector<std::vector<std::size_t>> perms;
  rows.reserve(instance.agents());
  perms.reserve(instance.agents());
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    const auto row = instance.row(i);
    std::vector<std::size_t> perm(row.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) {
                       return goods ? row[a] > row[b] : row[a] < row[b];
                     });
    std::vector<Value> sorted;
    sorted.reserve(row.size());
    for (std::size_t g : perm) sorted.push_back(row[g]);
    rows.push_back(std::move(sorted));
    perms.push_back(std::move(perm));
  }
  return {AdditiveInstance(std::move(rows), instance.kind()), std::move(perms)};
}

bool IsOrdered(const AdditiveInstance& instance) {
  const bool goods = instance.kind() == ItemKind::kGoods;
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    const auto row = instance.row(i);
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (goods ? row[j - 1] < row[j] : row[j - 1] > row[j]) return false;
    }
  }
  return true;
}

Allocation LiftAllocation(const OrderedReduction& reduction,
                          const AdditiveInstance& original,
                          const Allocation& ordered_allocation) {
  CheckCompatible(reduction.ordered, ordered_allocation);
  CheckCompatible(original, ordered_allocation);
  if (!ordered_allocation.complete()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "lifting needs a complete allocation of the ordered instance");
  }
  const std::size_t m = original.items();
  std::vector<std::size_t> picker(m);
  for (std::size_t i = 0; i < ordered_allocation.agents(); ++i) {
    for (std::size_t pos : ordered_allocation.bundle(i)) picker[pos] = i;
  }
  if (original.kind() == ItemKind::kChores) {
    std::reverse(picker.begin(), picker.end());
  }

  Allocation lifted(original.agents(), m);
  std::vector<bool> taken(m, false);
  for (std::size_t agent : picker) {
    const auto row = original.row(agent);
    std::size_t best = m;
    for (std::size_t g = 0; g < m; ++g) {
      if (taken[g]) continue;
      if (best == m || row[g] > row[best]) best = g;
    }
    taken[best] = true;
    lifted.Assign(agent, best);
  }

#ifndef NDEBUG
  for (std::size_t i = 0; i < original.agents(); ++i) {
    assert(BundleValue(original, i, lifted.bundle(i)) >=
           BundleValue(reduction.ordered, i, ordered_allocation.bundle(i)));
  }
#endif
  return lifted;
}

bool MmsInvarianceCheck(const AdditiveInstance& instance,
                        std::uint64_t budget) {
  const OrderedReduction reduction = ToOrdered(instance);
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    if (MmsExactAdditive(instance, i, budget).value !=
        MmsExactAdditive(reduction.ordered, i, budget).value) {
      return false;
    }
  }
  return true;
}

}  // namespace maximin
