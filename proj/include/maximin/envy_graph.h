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

#ifndef MAXIMIN_ENVY_GRAPH_H_
#define MAXIMIN_ENVY_GRAPH_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "maximin/core_model.h"

namespace maximin {

// Directed graph with an edge i -> j iff agent i envies agent j. Always
// derived from an (instance, allocation) pair.
class EnvyGraph {
 public:
  static EnvyGraph Build(const AdditiveInstance& instance,
                         const Allocation& allocation);

  std::size_t size() const { return n_; }
  bool HasEdge(std::size_t from, std::size_t to) const;
  std::size_t EdgeCount() const;
  std::vector<std::pair<std::size_t, std::size_t>> Edges() const;

  std::vector<std::size_t> Sources() const;
  std::vector<std::size_t> Sinks() const;

  // First cycle met by a depth-first search started from the lowest-index
  // unvisited node, neighbours taken in index order. The cycle is listed in
  // edge direction: c[0] -> c[1] -> ... -> c.back() -> c[0].
  std::optional<std::vector<std::size_t>> FindCycle() const;
  bool Acyclic() const { return !FindCycle().has_value(); }

 private:
  explicit EnvyGraph(std::size_t n) : n_(n), adj_(n * n, false) {}

  std::size_t n_;
  std::vector<bool> adj_;
};

EnvyGraph BuildEnvyGraph(const AdditiveInstance& instance,
                         const Allocation& allocation);

struct CycleResolution {
  Allocation allocation;
  std::vector<std::vector<std::size_t>> rotations;  // cycles, in order applied
};

// Rotates bundles along envy cycles until the envy graph is acyclic. Each
// rotation strictly removes edges and never lowers anyone's own value.
CycleResolution ResolveCycles(const AdditiveInstance& instance,
                              Allocation allocation);

struct TraceStep {
  std::size_t good = 0;
  std::size_t agent = 0;  // receiver, chosen before cycle resolution
  std::vector<std::vector<std::size_t>> rotations;
  std::vector<Value> values;  // own values after this step
};

struct RunTrace {
  std::vector<TraceStep> steps;
};

struct EnvyGraphRun {
  Allocation allocation;
  RunTrace trace;
};

enum class Receiver { kSource, kSink };

// Shared driver of the goods and chores envy-graph procedures: items are
// handed out in index order, each to the lowest-index source (goods) or sink
// (chores) of the current envy graph, and cycles are resolved after every
// assignment. Does not validate the ordering of the instance.
EnvyGraphRun RunEnvyGraphProcedure(const AdditiveInstance& ordered,
                                   Receiver receiver);

// Allocates goods g_1..g_m of an ordered goods instance in index order, each
// to the lowest-index source of the current envy graph, resolving cycles
// after every assignment.
EnvyGraphRun EnvyGraphAllocate(const AdditiveInstance& ordered);

// Ordered reduction, envy-graph allocation, then lifting. Every agent gets at
// least 2n/(3n-1) of its maximin share.
Allocation SolveAdditive(const AdditiveInstance& instance);

// Prefix-sum dominance of the descending sorts, with equal totals.
bool Majorizes(std::vector<Value> x, std::vector<Value> y);

// Rebuilds every intermediate partial allocation of `trace` (after each
// assignment and after each rotation) and checks IsEfx on all of them.
// Throws if the trace does not describe a valid run on `ordered`.
bool CheckEfxTrace(const AdditiveInstance& ordered, const RunTrace& trace);

// While every bundle holds at most two goods, the partial allocation of the
// first n+h goods must be {g_1}..{g_{n-h}}, {g_{n-h+1}, g_{n+h}}, ...,
// {g_n, g_{n+1}} up to reordering. Requires strictly distinct values within
// each row.
bool CheckPrefixStructure(const AdditiveInstance& ordered,
                          const RunTrace& trace);

// Partial allocation after the first `steps` steps of the trace.
Allocation ReplayTrace(const AdditiveInstance& ordered, const RunTrace& trace,
                       std::size_t steps);

}  // namespace maximin

#endif  // MAXIMIN_ENVY_GRAPH_H_
