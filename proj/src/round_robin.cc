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

#include "maximin/round_robin.h"

#include <string>

namespace maximin {

namespace {

void CheckValuations(const std::vector<ValuationPtr>& valuations) {
  if (valuations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one agent");
  }
  const std::size_t m = valuations.front()->ground_size();
  for (const auto& v : valuations) {
    if (v->ground_size() != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "valuations disagree on the number of goods");
    }
  }
}

}  // namespace

RoundRobinRun RoundRobin(const std::vector<ValuationPtr>& valuations,
                         const std::vector<Value>& thresholds,
                         const RoundRobinOptions& options) {
  CheckValuations(valuations);
  const std::size_t n = valuations.size();
  const std::size_t m = valuations.front()->ground_size();
  if (thresholds.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "got " + std::to_string(thresholds.size()) +
                    " thresholds for " + std::to_string(n) + " agents");
  }
  if (!options.skip_phase1.empty() && options.skip_phase1.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "skip_phase1 has wrong length");
  }

  RoundRobinRun run{Allocation(n, m), {}, {}, {}};
  GoodMask remaining = FullMask(m);
  std::vector<GoodMask> bundle(n, 0);

  // A single pass suffices: retirements only remove goods, so an agent with
  // no qualifying good at its turn never gains one later.
  for (std::size_t i = 0; i < n; ++i) {
    if (!options.skip_phase1.empty() && options.skip_phase1[i]) {
      run.phase2_agents.push_back(i);
      continue;
    }
    const SubmodularValuation& v = *valuations[i];
    const Value bar = thresholds[i] / 10;
    std::optional<std::size_t> best;
    Value best_value;
    for (std::size_t g : GoodsOf(remaining)) {
      Value value = v.Singleton(g);
      if (value >= bar && (!best || value > best_value)) {
        best = g;
        best_value = std::move(value);
      }
    }
    if (best) {
      remaining &= ~Bit(*best);
      bundle[i] = Bit(*best);
      run.allocation.Assign(i, *best);
      run.phase1.push_back({i, *best, best_value});
    } else {
      run.phase2_agents.push_back(i);
    }
  }

  if (run.phase2_agents.empty() && remaining != 0) {
    for (std::size_t i = 0; i < n; ++i) run.phase2_agents.push_back(i);
  }
  while (remaining != 0) {
    for (std::size_t i : run.phase2_agents) {
      if (remaining == 0) break;
      const SubmodularValuation& v = *valuations[i];
      std::optional<std::size_t> best;
      Value best_gain;
      for (std::size_t g : GoodsOf(remaining)) {
        Value gain = v.Marginal(bundle[i], g);
        if (!best || gain > best_gain) {
          best = g;
          best_gain = std::move(gain);
        }
      }
      remaining &= ~Bit(*best);
      bundle[i] |= Bit(*best);
      run.allocation.Assign(i, *best);
      run.phase2.push_back({i, *best, best_gain});
    }
  }
  return run;
}

bool DetectPositiveMms(const SubmodularValuation& f, std::size_t n) {
  std::size_t positive = 0;
  for (std::size_t g = 0; g < f.ground_size(); ++g) {
    if (f.Singleton(g) > 0) ++positive;
  }
  return positive >= n;
}

AlgSubResult AlgSub(const std::vector<ValuationPtr>& valuations,
                    const Value& delta) {
  CheckValuations(valuations);
  if (delta <= 0 || delta >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
  const std::size_t n = valuations.size();
  const std::size_t m = valuations.front()->ground_size();
  ThresholdState state;
  state.delta = delta;
  state.removed.assign(n, false);
  state.decays.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    state.removed[i] = !DetectPositiveMms(*valuations[i], n);
    state.tau.push_back(state.removed[i] ? Value(0)
                                         : valuations[i]->Evaluate(FullMask(m)));
    if (!state.removed[i]) state.unsatisfied.push_back(i);
  }

  RoundRobinOptions options;
  options.skip_phase1 = state.removed;
  const Value shrink = 1 / (1 + delta);
  RoundRobinRun run{Allocation(n, m), {}, {}, {}};
  bool ran = false;
  while (!state.unsatisfied.empty() || !ran) {
    for (std::size_t i : state.unsatisfied) {
      state.tau[i] *= shrink;
      ++state.decays[i];
    }
    run = RoundRobin(valuations, state.tau, options);
    ran = true;
    ++state.rounds;
    state.unsatisfied.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (state.removed[i]) continue;
      if (valuations[i]->Evaluate(run.allocation.bundle(i)) <
          state.tau[i] / 10) {
        state.unsatisfied.push_back(i);
      }
    }
  }
  return {std::move(run.allocation), std::move(state)};
}

}  // namespace maximin
