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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "maximin/chores.h"
#include "maximin/core_model.h"
#include "maximin/envy_graph.h"
#include "maximin/error.h"
#include "maximin/generators.h"
#include "maximin/io.h"
#include "maximin/mms.h"
#include "maximin/multilinear.h"
#include "maximin/report.h"
#include "maximin/submodular.h"
#include "maximin/value.h"

namespace py = pybind11;

namespace maximin {
namespace {

// Values cross the boundary as fractions.Fraction. Ints and "p/q" strings
// are accepted on the way in; floats are refused.
Value ToValue(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) {
    throw Error(ErrorCode::kParse, "floats are not exact; pass an int, Fraction or 'p/q' string");
  }
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj)) {
    return ParseValue(py::str(obj).cast<std::string>());
  }
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  if (py::isinstance(obj, fraction)) return ParseValue(py::str(obj).cast<std::string>());
  throw Error(ErrorCode::kParse, "cannot read a value from " +
                                     py::repr(obj).cast<std::string>());
}

py::object ToFraction(const Value& v) {
  return py::module_::import("fractions").attr("Fraction")(FormatValue(v));
}

std::vector<Value> ToRow(const py::iterable& row) {
  std::vector<Value> out;
  for (const auto& x : row) out.push_back(ToValue(x));
  return out;
}

AdditiveInstance ToInstance(const py::iterable& values, const std::string& kind) {
  std::vector<std::vector<Value>> rows;
  for (const auto& r : values) rows.push_back(ToRow(py::reinterpret_borrow<py::iterable>(r)));
  if (kind != "goods" && kind != "chores") {
    throw Error(ErrorCode::kInvalidArgument, "kind must be 'goods' or 'chores'");
  }
  return AdditiveInstance(std::move(rows), kind == "goods" ? ItemKind::kGoods : ItemKind::kChores);
}

Allocation ToAllocation(const std::vector<Bundle>& bundles, std::size_t m) {
  return Allocation(bundles, m);
}

ExplicitTable ToTable(const py::iterable& table) {
  std::vector<Value> t = ToRow(table);
  std::size_t m = 0;
  while ((std::size_t{1} << m) < t.size()) ++m;
  return ExplicitTable(m, std::move(t));
}

py::tuple Certificate(const MmsCertificate& c) {
  return py::make_tuple(ToFraction(c.value), c.witness.bundles());
}

}  // namespace
}  // namespace maximin

PYBIND11_MODULE(_core, m) {
  using namespace maximin;
  m.doc() = "Exact-arithmetic maximin share allocation";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("solve_additive",
        [](const py::iterable& values) { return SolveAdditive(ToInstance(values, "goods")).bundles(); },
        py::arg("values"), "2n/(3n-1)-approximate allocation of goods.");
  m.def("solve_chores",
        [](const py::iterable& values) { return SolveChores(ToInstance(values, "chores")).bundles(); },
        py::arg("values"), "(4n-1)/(3n)-approximate allocation of chores.");
  m.def("mms_exact",
        [](const py::iterable& row, std::size_t n, std::uint64_t budget) {
          return Certificate(MmsExactRow(ToRow(row), n, budget));
        },
        py::arg("row"), py::arg("n"), py::arg("budget") = kDefaultOracleBudget,
        "Exact n-maximin share of an additive row, with a witness partition.");
  m.def("mms_exact_table",
        [](const py::iterable& table, std::size_t n, std::uint64_t budget) {
          return Certificate(MmsExactSubmodular(ToTable(table), n, budget));
        },
        py::arg("table"), py::arg("n"), py::arg("budget") = kDefaultOracleBudget);
  m.def("is_ef1",
        [](const py::iterable& values, const std::vector<Bundle>& bundles, const std::string& kind) {
          const AdditiveInstance inst = ToInstance(values, kind);
          return IsEf1(inst, ToAllocation(bundles, inst.items()));
        },
        py::arg("values"), py::arg("allocation"), py::arg("kind") = "goods");
  m.def("is_efx",
        [](const py::iterable& values, const std::vector<Bundle>& bundles, const std::string& kind) {
          const AdditiveInstance inst = ToInstance(values, kind);
          return IsEfx(inst, ToAllocation(bundles, inst.items()));
        },
        py::arg("values"), py::arg("allocation"), py::arg("kind") = "goods");
  m.def("verify_submodular",
        [](const py::iterable& table) { return VerifySubmodular(ToTable(table)).ok; },
        py::arg("table"), "Exhaustive submodularity and monotonicity check of a 2^m table.");
  m.def("multilinear_exact",
        [](const py::iterable& table, const py::iterable& x) {
          return ToFraction(MultilinearExact(ToTable(table), ToRow(x)));
        },
        py::arg("table"), py::arg("x"));
  m.def("multilinear_monte_carlo",
        [](const py::iterable& table, const py::iterable& x, std::size_t samples,
           std::uint64_t seed) {
          const MonteCarloEstimate e = MultilinearMonteCarlo(ToTable(table), ToRow(x), samples, seed);
          return py::make_tuple(e.estimate, e.std_error);
        },
        py::arg("table"), py::arg("x"), py::arg("samples") = 10000, py::arg("seed") = 1);
  m.def("generate",
        [](const std::string& kind, std::size_t n, std::size_t items, std::uint64_t seed,
           bool identical) {
          GeneratorSpec spec = DefaultSpec(ParseGeneratorKind(kind), n, items, seed);
          spec.identical = identical;
          return std::visit([](auto&& g) { return SerializeProblem(MakeProblem(std::move(g))); },
                            Generate(spec));
        },
        py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("seed") = 1,
        py::arg("identical") = false, "Instance file text for a seeded random instance.");
  m.def("solve_report",
        [](const std::string& text, const std::string& command, const py::object& delta) {
          SolveOptions options;
          options.delta = ToValue(delta);
          return ReportJson(SolveAndReport(ParseProblem(text), command, options));
        },
        py::arg("instance"), py::arg("command"), py::arg("delta") = "1/20",
        "Runs solve-additive, solve-chores or solve-submodular; returns report JSON.");
  m.def("verify_report",
        [](const std::string& text, const py::object& delta) {
          const Problem p = ParseProblem(text);
          if (!p.allocation) {
            throw Error(ErrorCode::kInvalidArgument, "the instance carries no allocation");
          }
          return ReportJson(EvaluateAllocation(p, *p.allocation, DefaultGuarantee(p, ToValue(delta))));
        },
        py::arg("instance"), py::arg("delta") = "1/20");
}
