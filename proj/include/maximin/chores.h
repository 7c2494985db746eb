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

#ifndef MAXIMIN_CHORES_H_
#define MAXIMIN_CHORES_H_

#include <cstddef>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/envy_graph.h"

namespace maximin {

// Hands out chores of an ordered chores instance (most burdensome first),
// each to the lowest-index sink of the current envy graph, resolving cycles
// after every assignment.
EnvyGraphRun ChoresEnvyGraphAllocate(const AdditiveInstance& ordered);

// Ordered reduction, sink-directed envy-graph allocation, then lifting.
// Every agent ends with v_i(A_i) >= (4n-1)/(3n) mu_i.
Allocation SolveChores(const AdditiveInstance& instance);

// value * 3n >= (4n-1) * mu, the chores guarantee without division.
bool ChoresGuaranteeHolds(const Value& value, const Value& mu, std::size_t n);

// Pairing of d <= 2n chores sorted by non-increasing burden: the 2n-d
// heaviest stay alone, the rest pair up outside-in. Bundles that get no
// chore are left empty.
Allocation LptChoresPartition(const std::vector<Value>& values, std::size_t n);

}  // namespace maximin

#endif  // MAXIMIN_CHORES_H_
