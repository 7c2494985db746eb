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

#include "maximin/chores.h"

#include "maximin/ordered_reduction.h"

namespace maximin {

EnvyGraphRun ChoresEnvyGraphAllocate(const AdditiveInstance& ordered) {
  if (ordered.kind() != ItemKind::kChores) {
    throw Error(ErrorCode::kInvalidArgument,
                "envy-graph allocation of chores needs a chores instance");
  }
  if (!IsOrdered(ordered)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "instance is not ordered; apply ToOrdered first");
  }
  return RunEnvyGraphProcedure(ordered, Receiver::kSink);
}

Allocation SolveChores(const AdditiveInstance& instance) {
  if (instance.kind() != ItemKind::kChores) {
    throw Error(ErrorCode::kInvalidArgument, "SolveChores expects chores");
  }
  const OrderedReduction reduction = ToOrdered(instance);
  const EnvyGraphRun run = ChoresEnvyGraphAllocate(reduction.ordered);
  return LiftAllocation(reduction, instance, run.allocation);
}

bool ChoresGuaranteeHolds(const Value& value, const Value& mu, std::size_t n) {
  const auto k = static_cast<unsigned long>(n);
  return value * (3 * k) >= mu * (4 * k - 1);
}

Allocation LptChoresPartition(const std::vector<Value>& values, std::size_t n) {
  const std::size_t d = values.size();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one bundle");
  }
  if (d > 2 * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "pairing needs at most 2n chores, got " + std::to_string(d) +
                    " for n = " + std::to_string(n));
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (values[k] > 0) {
      throw Error(ErrorCode::kInvalidArgument, "chores must be non-positive");
    }
    if (k > 0 && values[k] < values[k - 1]) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "chores must be sorted by non-increasing burden");
    }
  }
  std::vector<Bundle> bundles(n);
  if (d <= n) {
    for (std::size_t k = 0; k < d; ++k) bundles[k].push_back(k);
  } else {
    const std::size_t singles = 2 * n - d;
    for (std::size_t k = 0; k < singles; ++k) bundles[k].push_back(k);
    for (std::size_t k = singles; k < n; ++k) {
      bundles[k] = {k, d - 1 - (k - singles)};
    }
  }
  return Allocation(std::move(bundles), d);
}

}  // namespace maximin
