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

#ifndef MAXIMIN_IO_H_
#define MAXIMIN_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/submodular.h"

namespace maximin {

enum class ProblemKind { kAdditiveGoods, kAdditiveChores, kSubmodular };

// "additive-goods", "additive-chores", "submodular".
std::string ProblemKindName(ProblemKind kind);

// Everything an instance file can hold.
struct Problem {
  ProblemKind kind = ProblemKind::kAdditiveGoods;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<AdditiveInstance> additive;  // additive kinds
  std::vector<ValuationPtr> valuations;      // submodular kind
  std::vector<std::string> good_names;       // optional, one per good
  std::optional<Allocation> allocation;      // optional, checked by verify
};

Problem MakeProblem(AdditiveInstance instance);
Problem MakeProblem(std::vector<ValuationPtr> valuations);

// Oracle views of the agents: the rows of an additive instance become
// additive valuations.
std::vector<ValuationPtr> ValuationsOf(const Problem& problem);

// Instance files are JSON:
//
//   {"version": 1, "kind": "additive-goods", "n": 2, "m": 3,
//    "values": [["1", "3/2", 2], [0, "1/3", "7"]]}
//
//   {"version": 1, "kind": "submodular", "n": 2, "m": 2,
//    "valuations": [
//      {"family": "explicit", "table": [0, 1, 1, "3/2"]},
//      {"family": "coverage", "weights": [1, 2], "covers": [[0], [0, 1]]},
//      {"family": "budget-additive", "weights": [1, 1], "cap": "3/2"},
//      {"family": "additive", "weights": [1, 2]}]}
//
// Values are integers or exact-rational strings "p/q". Bit k of an explicit
// table's index is good k. Optional keys: "goods" (names) and "allocation"
// (one list of good indices per agent). Errors carry the JSON pointer of the
// offending field, or the line and column of a syntax error.
Problem ParseProblem(const std::string& text);
std::string SerializeProblem(const Problem& problem);

Problem ReadProblemFile(const std::string& path);
std::string ReadTextFile(const std::string& path);
// "-" or empty writes to stdout.
void WriteTextFile(const std::string& path, const std::string& text);

// Parses a list of bundles over `universe` goods from JSON text such as
// [[0, 2], [1]].
Allocation ParseAllocation(const std::string& text, std::size_t universe);

}  // namespace maximin

#endif  // MAXIMIN_IO_H_
