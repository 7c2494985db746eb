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

#ifndef MAXIMIN_ORDERED_REDUCTION_H_
#define MAXIMIN_ORDERED_REDUCTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maximin/core_model.h"

namespace maximin {

// An instance in which every agent ranks the items identically, together with
// the per-agent permutations back to the original items.
struct OrderedReduction {
  AdditiveInstance ordered;
  // perms[i][position] = original item at that position of row i.
  std::vector<std::vector<std::size_t>> perms;

  // original item -> position, for agent i.
  std::vector<std::size_t> InversePermutation(std::size_t agent) const;
};

// Goods rows are sorted non-increasing; chores rows non-decreasing in value
// (most burdensome first). Stable: ties keep the lower original index first.
OrderedReduction ToOrdered(const AdditiveInstance& instance);

// True iff every row is in the order ToOrdered would produce for its kind.
bool IsOrdered(const AdditiveInstance& instance);

// Turns a complete allocation of the ordered instance into one of the
// original instance in which every agent is at least as well off:
// v_i(A_i) >= v'_i(A'_i). The owners of the ordered positions, read from the
// most valuable position to the least valuable one, form a picking sequence;
// each picker takes its favourite remaining original item (lowest index on
// ties). For chores the most valuable position is the last one.
Allocation LiftAllocation(const OrderedReduction& reduction,
                          const AdditiveInstance& original,
                          const Allocation& ordered_allocation);

// True iff every agent's exact maximin share is the same in the instance and
// in its ordered version. Throws kBudgetExceeded when the exact oracle would
// exceed `budget`.
bool MmsInvarianceCheck(const AdditiveInstance& instance,
                        std::uint64_t budget = 100'000'000);

}  // namespace maximin

#endif  // MAXIMIN_ORDERED_REDUCTION_H_
