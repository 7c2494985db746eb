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

#ifndef MAXIMIN_ROUND_ROBIN_H_
#define MAXIMIN_ROUND_ROBIN_H_

#include <cstddef>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/submodular.h"

namespace maximin {

struct RoundRobinPick {
  std::size_t agent = 0;
  std::size_t good = 0;
  Value gain;  // singleton value in phase 1, marginal gain in phase 2
};

struct RoundRobinRun {
  Allocation allocation;
  std::vector<RoundRobinPick> phase1;
  std::vector<RoundRobinPick> phase2;
  std::vector<std::size_t> phase2_agents;
};

struct RoundRobinOptions {
  // Agents flagged here never claim a singleton in phase 1; they only take
  // part in the round-robin phase.
  std::vector<bool> skip_phase1;
};

// Phase 1: agents in index order claim their most valuable good j with
// v_i({j}) >= tau_i / 10, if any, and retire. Phase 2: the remaining agents,
// in index order, repeatedly take the remaining good of largest marginal
// value until no goods are left. If phase 1 retires everybody, leftover goods
// go round-robin to all agents.
RoundRobinRun RoundRobin(const std::vector<ValuationPtr>& valuations,
                         const std::vector<Value>& thresholds,
                         const RoundRobinOptions& options = {});

// True iff at least n goods have positive singleton value, i.e. the n-maximin
// share of a monotone submodular f is positive.
bool DetectPositiveMms(const SubmodularValuation& f, std::size_t n);

struct ThresholdState {
  std::vector<Value> tau;
  Value delta;
  std::vector<std::size_t> unsatisfied;  // empty once AlgSub returns
  std::vector<bool> removed;             // agents with zero maximin share
  std::vector<std::size_t> decays;       // times each agent's tau shrank
  std::size_t rounds = 0;                // RoundRobin invocations
};

struct AlgSubResult {
  Allocation allocation;
  ThresholdState state;
};

inline Value DefaultDelta() { return Value(1, 20); }

// Starts from tau_i = v_i([m]) and divides the thresholds of unsatisfied
// agents by (1 + delta) until RoundRobin satisfies v_i(P_i) >= tau_i / 10 for
// everyone. Agents whose maximin share is zero are set aside: they keep
// tau_i = 0 and join only the round-robin phase.
AlgSubResult AlgSub(const std::vector<ValuationPtr>& valuations,
                    const Value& delta = DefaultDelta());

}  // namespace maximin

#endif  // MAXIMIN_ROUND_ROBIN_H_
