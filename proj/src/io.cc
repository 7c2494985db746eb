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

#include "maximin/io.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace maximin {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, (where.empty() ? "/" : where) + ": " + what);
}

const json& At(const json& object, const std::string& key,
               const std::string& path) {
  if (!object.is_object()) Fail(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) Fail(path + "/" + key, "missing field");
  return *it;
}

std::size_t ReadCount(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) Fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Value ReadValue(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Value(j.get<long>());
  if (j.is_string()) {
    try {
      return ParseValue(j.get<std::string>());
    } catch (const Error& e) {
      Fail(path, e.detail());
    }
  }
  if (j.is_number_float()) {
    Fail(path, "floating-point values are ambiguous; write \"p/q\" instead");
  }
  Fail(path, "expected an integer or a \"p/q\" string");
}

std::vector<Value> ReadValues(const json& j, const std::string& path,
                              std::optional<std::size_t> size) {
  if (!j.is_array()) Fail(path, "expected an array");
  if (size && j.size() != *size) {
    Fail(path, "expected " + std::to_string(*size) + " entries, found " +
                   std::to_string(j.size()));
  }
  std::vector<Value> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(ReadValue(j[k], path + "/" + std::to_string(k)));
  }
  return out;
}

std::vector<std::size_t> ReadIndices(const json& j, const std::string& path,
                                     std::size_t limit) {
  if (!j.is_array()) Fail(path, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = path + "/" + std::to_string(k);
    const std::size_t v = ReadCount(j[k], at);
    if (v >= limit) {
      Fail(at, "index " + std::to_string(v) + " out of range [0, " +
                   std::to_string(limit) + ")");
    }
    out.push_back(v);
  }
  return out;
}

Allocation ReadAllocation(const json& j, const std::string& path,
                          std::optional<std::size_t> agents,
                          std::size_t universe) {
  if (!j.is_array()) Fail(path, "expected an array of bundles");
  if (agents && j.size() != *agents) {
    Fail(path, "expected " + std::to_string(*agents) + " bundles, found " +
                   std::to_string(j.size()));
  }
  std::vector<Bundle> bundles;
  for (std::size_t i = 0; i < j.size(); ++i) {
    bundles.push_back(ReadIndices(j[i], path + "/" + std::to_string(i), universe));
  }
  try {
    return Allocation(std::move(bundles), universe);
  } catch (const Error& e) {
    Fail(path, e.detail());
  }
}

ValuationPtr ReadValuation(const json& j, const std::string& path,
                           std::size_t m) {
  const json& family = At(j, "family", path);
  if (!family.is_string()) Fail(path + "/family", "expected a string");
  const std::string name = family.get<std::string>();
  try {
    if (name == "explicit") {
      if (m > 20) Fail(path, "explicit tables are limited to 20 goods");
      return std::make_shared<ExplicitTable>(
          m, ReadValues(At(j, "table", path), path + "/table",
                        std::size_t{1} << m));
    }
    if (name == "coverage") {
      std::vector<Value> weights =
          ReadValues(At(j, "weights", path), path + "/weights", std::nullopt);
      const json& covers = At(j, "covers", path);
      if (!covers.is_array() || covers.size() != m) {
        Fail(path + "/covers", "expected one element list per good");
      }
      std::vector<std::vector<std::size_t>> lists;
      for (std::size_t g = 0; g < m; ++g) {
        lists.push_back(ReadIndices(covers[g],
                                    path + "/covers/" + std::to_string(g),
                                    weights.size()));
      }
      return std::make_shared<WeightedCoverage>(std::move(weights),
                                                std::move(lists));
    }
    if (name == "budget-additive") {
      return std::make_shared<BudgetAdditive>(
          ReadValues(At(j, "weights", path), path + "/weights", m),
          ReadValue(At(j, "cap", path), path + "/cap"));
    }
    if (name == "additive") {
      return std::make_shared<AdditiveValuation>(
          ReadValues(At(j, "weights", path), path + "/weights", m));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    Fail(path, e.detail());
  }
  Fail(path + "/family", "unknown valuation family '" + name + "'");
}

json ValueJson(const Value& v) { return FormatValue(v); }

json ValuesJson(const std::vector<Value>& values) {
  json out = json::array();
  for (const Value& v : values) out.push_back(ValueJson(v));
  return out;
}

json ValuationJson(const SubmodularValuation& f) {
  if (const auto* t = dynamic_cast<const ExplicitTable*>(&f)) {
    return {{"family", "explicit"}, {"table", ValuesJson(t->table())}};
  }
  if (const auto* c = dynamic_cast<const WeightedCoverage*>(&f)) {
    return {{"family", "coverage"},
            {"weights", ValuesJson(c->element_weights())},
            {"covers", c->covers()}};
  }
  if (const auto* b = dynamic_cast<const BudgetAdditive*>(&f)) {
    return {{"family", "budget-additive"},
            {"weights", ValuesJson(b->weights())},
            {"cap", ValueJson(b->cap())}};
  }
  if (const auto* a = dynamic_cast<const AdditiveValuation*>(&f)) {
    return {{"family", "additive"}, {"weights", ValuesJson(a->weights())}};
  }
  if (f.ground_size() <= 20) {
    return ValuationJson(*ExplicitTable::Tabulate(f));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "cannot serialize a '" + f.family() + "' valuation");
}

}  // namespace

std::string ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kAdditiveGoods: return "additive-goods";
    case ProblemKind::kAdditiveChores: return "additive-chores";
    case ProblemKind::kSubmodular: return "submodular";
  }
  return "unknown";
}

Problem MakeProblem(AdditiveInstance instance) {
  Problem p;
  p.kind = instance.kind() == ItemKind::kGoods ? ProblemKind::kAdditiveGoods
                                               : ProblemKind::kAdditiveChores;
  p.n = instance.agents();
  p.m = instance.items();
  p.additive = std::move(instance);
  return p;
}

Problem MakeProblem(std::vector<ValuationPtr> valuations) {
  if (valuations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one agent");
  }
  Problem p;
  p.kind = ProblemKind::kSubmodular;
  p.n = valuations.size();
  p.m = valuations.front()->ground_size();
  for (const auto& f : valuations) {
    if (f->ground_size() != p.m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "valuations disagree on the number of goods");
    }
  }
  p.valuations = std::move(valuations);
  return p;
}

std::vector<ValuationPtr> ValuationsOf(const Problem& problem) {
  if (problem.kind == ProblemKind::kSubmodular) return problem.valuations;
  std::vector<ValuationPtr> out;
  for (const auto& row : problem.additive->values()) {
    out.push_back(std::make_shared<AdditiveValuation>(row));
  }
  return out;
}

Problem ParseProblem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  const json& version = At(doc, "version", "");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    Fail("/version", "unsupported version (expected 1)");
  }
  const json& kind = At(doc, "kind", "");
  if (!kind.is_string()) Fail("/kind", "expected a string");
  const std::size_t n = ReadCount(At(doc, "n", ""), "/n");
  const std::size_t m = ReadCount(At(doc, "m", ""), "/m");
  if (n == 0) Fail("/n", "need at least one agent");

  Problem p;
  const std::string k = kind.get<std::string>();
  if (k == "additive-goods" || k == "additive-chores") {
    const json& values = At(doc, "values", "");
    if (!values.is_array() || values.size() != n) {
      Fail("/values", "expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<Value>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(ReadValues(values[i], "/values/" + std::to_string(i), m));
    }
    try {
      p = MakeProblem(AdditiveInstance(
          std::move(rows),
          k == "additive-goods" ? ItemKind::kGoods : ItemKind::kChores));
    } catch (const Error& e) {
      Fail("/values", e.detail());
    }
  } else if (k == "submodular") {
    const json& list = At(doc, "valuations", "");
    if (!list.is_array() || list.size() != n) {
      Fail("/valuations", "expected " + std::to_string(n) + " valuations");
    }
    std::vector<ValuationPtr> valuations;
    for (std::size_t i = 0; i < n; ++i) {
      valuations.push_back(
          ReadValuation(list[i], "/valuations/" + std::to_string(i), m));
    }
    p = MakeProblem(std::move(valuations));
    p.m = m;
  } else {
    Fail("/kind", "unknown kind '" + k + "'");
  }

  if (const auto it = doc.find("goods"); it != doc.end()) {
    if (!it->is_array() || it->size() != m) {
      Fail("/goods", "expected one name per good");
    }
    for (std::size_t g = 0; g < m; ++g) {
      if (!(*it)[g].is_string()) Fail("/goods/" + std::to_string(g), "expected a string");
      p.good_names.push_back((*it)[g].get<std::string>());
    }
  }
  if (const auto it = doc.find("allocation"); it != doc.end()) {
    p.allocation = ReadAllocation(*it, "/allocation", n, m);
  }
  return p;
}

std::string SerializeProblem(const Problem& problem) {
  json doc;
  doc["version"] = 1;
  doc["kind"] = ProblemKindName(problem.kind);
  doc["n"] = problem.n;
  doc["m"] = problem.m;
  if (problem.kind == ProblemKind::kSubmodular) {
    json list = json::array();
    for (const auto& f : problem.valuations) list.push_back(ValuationJson(*f));
    doc["valuations"] = std::move(list);
  } else {
    json rows = json::array();
    for (const auto& row : problem.additive->values()) rows.push_back(ValuesJson(row));
    doc["values"] = std::move(rows);
  }
  if (!problem.good_names.empty()) doc["goods"] = problem.good_names;
  if (problem.allocation) doc["allocation"] = problem.allocation->bundles();
  return doc.dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Problem ReadProblemFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseProblem(text);
  } catch (const Error& e) {
    throw Error(e.code(), (path.empty() ? "<stdin>" : path) + ": " + e.detail());
  }
}

Allocation ParseAllocation(const std::string& text, std::size_t universe) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return ReadAllocation(doc, "", std::nullopt, universe);
}

}  // namespace maximin
