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

#include "maximin/envy_graph.h"

#include <algorithm>
#include <functional>
#include <string>

#include "maximin/ordered_reduction.h"

namespace maximin {

EnvyGraph EnvyGraph::Build(const AdditiveInstance& instance,
                           const Allocation& allocation) {
  CheckCompatible(instance, allocation);
  const std::size_t n = instance.agents();
  EnvyGraph graph(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Value own = BundleValue(instance, i, allocation.bundle(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && own < BundleValue(instance, i, allocation.bundle(j))) {
        graph.adj_[i * n + j] = true;
      }
    }
  }
  return graph;
}

bool EnvyGraph::HasEdge(std::size_t from, std::size_t to) const {
  CheckAgent(from, n_);
  CheckAgent(to, n_);
  return adj_[from * n_ + to];
}

std::size_t EnvyGraph::EdgeCount() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true));
}

std::vector<std::pair<std::size_t, std::size_t>> EnvyGraph::Edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (adj_[i * n_ + j]) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::size_t> EnvyGraph::Sources() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    bool incoming = false;
    for (std::size_t i = 0; i < n_ && !incoming; ++i) incoming = adj_[i * n_ + j];
    if (!incoming) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> EnvyGraph::Sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    bool outgoing = false;
    for (std::size_t j = 0; j < n_ && !outgoing; ++j) outgoing = adj_[i * n_ + j];
    if (!outgoing) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> EnvyGraph::FindCycle() const {
  enum class Mark { kWhite, kGray, kBlack };
  std::vector<Mark> mark(n_, Mark::kWhite);
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> found;

  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    mark[u] = Mark::kGray;
    stack.push_back(u);
    for (std::size_t v = 0; v < n_; ++v) {
      if (!adj_[u * n_ + v]) continue;
      if (mark[v] == Mark::kGray) {
        auto start = std::find(stack.begin(), stack.end(), v);
        found = std::vector<std::size_t>(start, stack.end());
        return true;
      }
      if (mark[v] == Mark::kWhite && visit(v)) return true;
    }
    stack.pop_back();
    mark[u] = Mark::kBlack;
    return false;
  };

  for (std::size_t s = 0; s < n_; ++s) {
    if (mark[s] == Mark::kWhite && visit(s)) return found;
  }
  return std::nullopt;
}

EnvyGraph BuildEnvyGraph(const AdditiveInstance& instance,
                         const Allocation& allocation) {
  return EnvyGraph::Build(instance, allocation);
}

CycleResolution ResolveCycles(const AdditiveInstance& instance,
                              Allocation allocation) {
  CycleResolution out{std::move(allocation), {}};
  while (true) {
    auto cycle = EnvyGraph::Build(instance, out.allocation).FindCycle();
    if (!cycle) break;
    out.allocation.Rotate(*cycle);
    out.rotations.push_back(std::move(*cycle));
  }
  return out;
}

EnvyGraphRun RunEnvyGraphProcedure(const AdditiveInstance& ordered,
                                   Receiver receiver) {
  const std::size_t n = ordered.agents();
  EnvyGraphRun run{Allocation(n, ordered.items()), {}};
  for (std::size_t g = 0; g < ordered.items(); ++g) {
    const EnvyGraph graph = EnvyGraph::Build(ordered, run.allocation);
    const auto candidates =
        receiver == Receiver::kSource ? graph.Sources() : graph.Sinks();
    // The graph is acyclic here, so a source and a sink both exist.
    if (candidates.empty()) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "envy graph has no " +
                      std::string(receiver == Receiver::kSource ? "source"
                                                                : "sink"));
    }
    TraceStep step;
    step.good = g;
    step.agent = candidates.front();
    run.allocation.Assign(step.agent, g);
    CycleResolution resolved = ResolveCycles(ordered, std::move(run.allocation));
    run.allocation = std::move(resolved.allocation);
    step.rotations = std::move(resolved.rotations);
    step.values = OwnValues(ordered, run.allocation);
    run.trace.steps.push_back(std::move(step));
  }
  return run;
}

EnvyGraphRun EnvyGraphAllocate(const AdditiveInstance& ordered) {
  if (ordered.kind() != ItemKind::kGoods) {
    throw Error(ErrorCode::kInvalidArgument,
                "envy-graph allocation of goods needs a goods instance");
  }
  if (!IsOrdered(ordered)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "instance is not ordered; apply ToOrdered first");
  }
  return RunEnvyGraphProcedure(ordered, Receiver::kSource);
}

Allocation SolveAdditive(const AdditiveInstance& instance) {
  if (instance.kind() != ItemKind::kGoods) {
    throw Error(ErrorCode::kInvalidArgument, "SolveAdditive expects goods");
  }
  const OrderedReduction reduction = ToOrdered(instance);
  const EnvyGraphRun run = EnvyGraphAllocate(reduction.ordered);
  return LiftAllocation(reduction, instance, run.allocation);
}

bool Majorizes(std::vector<Value> x, std::vector<Value> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "majorization compares multisets of equal size");
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  Value px = 0, py = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px < py) return false;
  }
  return px == py;
}

namespace {

void CheckTraceShape(const AdditiveInstance& ordered, const RunTrace& trace) {
  if (trace.steps.size() > ordered.items()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "trace has more steps than the instance has goods");
  }
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const TraceStep& step = trace.steps[t];
    if (step.good != t) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "trace step " + std::to_string(t) + " allocates good " +
                      std::to_string(step.good));
    }
    CheckAgent(step.agent, ordered.agents());
  }
}

// Replays the trace, invoking `on_state` after each assignment and each
// rotation. Rotations must follow envy cycles of the state they act on, and
// the recorded values must match the replayed state.
template <typename Visitor>
Allocation Replay(const AdditiveInstance& ordered, const RunTrace& trace,
                  std::size_t steps, Visitor on_state) {
  CheckTraceShape(ordered, trace);
  Allocation state(ordered.agents(), ordered.items());
  for (std::size_t t = 0; t < steps && t < trace.steps.size(); ++t) {
    const TraceStep& step = trace.steps[t];
    state.Assign(step.agent, step.good);
    on_state(state);
    for (const auto& cycle : step.rotations) {
      const EnvyGraph graph = EnvyGraph::Build(ordered, state);
      for (std::size_t a = 0; a < cycle.size(); ++a) {
        if (!graph.HasEdge(cycle[a], cycle[(a + 1) % cycle.size()])) {
          throw Error(ErrorCode::kDimensionMismatch,
                      "trace rotation at step " + std::to_string(t) +
                          " is not an envy cycle");
        }
      }
      state.Rotate(cycle);
      on_state(state);
    }
    if (!step.values.empty() && step.values != OwnValues(ordered, state)) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "recorded values disagree with replay at step " +
                      std::to_string(t));
    }
  }
  return state;
}

}  // namespace

Allocation ReplayTrace(const AdditiveInstance& ordered, const RunTrace& trace,
                       std::size_t steps) {
  return Replay(ordered, trace, steps, [](const Allocation&) {});
}

bool CheckEfxTrace(const AdditiveInstance& ordered, const RunTrace& trace) {
  bool ok = true;
  Replay(ordered, trace, trace.steps.size(), [&](const Allocation& state) {
    if (ok && !IsEfx(ordered, state)) ok = false;
  });
  return ok;
}

bool CheckPrefixStructure(const AdditiveInstance& ordered,
                          const RunTrace& trace) {
  for (std::size_t i = 0; i < ordered.agents(); ++i) {
    const auto row = ordered.row(i);
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (!(row[j - 1] > row[j])) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "prefix structure needs strictly decreasing rows (agent " +
                        std::to_string(i) + ")");
      }
    }
  }
  const std::size_t n = ordered.agents();
  bool ok = true;
  std::size_t placed = 0;
  bool window_open = true;
  Replay(ordered, trace, trace.steps.size(), [&](const Allocation& state) {
    if (!window_open || !ok) return;
    placed = state.allocated_count();
    for (const Bundle& b : state.bundles()) {
      if (b.size() > 2) {
        window_open = false;
        return;
      }
    }
    // Expected bundles, 0-based: singletons 0..n-h-1, then pairs
    // (n-h+k, n+h-1-k) for k = 0..h-1.
    const std::size_t h = placed > n ? placed - n : 0;
    std::vector<Bundle> expected;
    for (std::size_t g = 0; g < std::min(placed, n - h); ++g) {
      expected.push_back({g});
    }
    for (std::size_t k = 0; k < h; ++k) {
      expected.push_back({n - h + k, n + h - 1 - k});
    }
    while (expected.size() < n) expected.push_back({});
    std::vector<Bundle> actual = state.bundles();
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (actual != expected) ok = false;
  });
  return ok;
}

}  // namespace maximin
