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

// Command-line front end: solvers, share oracles, verification, instance
// generation and batch sweeps. Exit status 0 on success, 2 when a guarantee
// check fails, 1 on bad input.

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "maximin/generators.h"
#include "maximin/io.h"
#include "maximin/mms.h"
#include "maximin/report.h"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

struct Flags {
  std::string input;
  std::string output = "-";
  std::uint64_t seed = 1;
  std::string delta = "1/20";
  std::string epsilon = "1/100";
  std::uint64_t oracle_budget = maximin::kDefaultOracleBudget;
  std::string matroid_solver = "exhaustive";
  std::string format = "json";
  std::string allocation;
  std::size_t jobs = 0;
  // generate / fixtures
  std::string kind = "uniform-additive";
  std::size_t n = 2;
  std::size_t m = 4;
  std::int64_t lo = 0;
  std::int64_t hi = 100;
  bool range_given = false;
  bool seed_given = false;
  bool budget_given = false;
  bool identical = false;
  bool distinct = false;
  std::size_t elements = 0;
  std::string name;
};

void AddFormat(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output", f.output, "Output file ('-' for stdout)");
}

void AddInput(CLI::App* cmd, Flags& f,
              const std::string& what = "Instance file ('-' for stdin)") {
  cmd->add_option("--input", f.input, what)->required();
}

std::string Render(const Flags& f, const maximin::SolutionReport& r) {
  return f.format == "table" ? maximin::ReportTable(r) : maximin::ReportJson(r);
}

std::string Render(const Flags& f, const maximin::ShareReport& r) {
  return f.format == "table" ? maximin::ReportTable(r) : maximin::ReportJson(r);
}

std::unique_ptr<maximin::MatroidSolver> MakeSolver(const Flags& f) {
  if (f.matroid_solver == "greedy") {
    return std::make_unique<maximin::GreedyMatroidSolver>();
  }
  return std::make_unique<maximin::ExhaustiveMatroidSolver>();
}

int Solve(const Flags& f, const std::string& command) {
  const maximin::Problem problem = maximin::ReadProblemFile(f.input);
  maximin::SolveOptions options;
  options.delta = maximin::ParseValue(f.delta);
  options.budget = f.oracle_budget;
  const maximin::SolutionReport report =
      maximin::SolveAndReport(problem, command, options);
  maximin::WriteTextFile(f.output, Render(f, report));
  return report.pass ? kOk : kViolation;
}

int Verify(const Flags& f) {
  maximin::Problem problem = maximin::ReadProblemFile(f.input);
  if (!f.allocation.empty()) {
    problem.allocation = maximin::ParseAllocation(
        maximin::ReadTextFile(f.allocation), problem.m);
  }
  if (!problem.allocation) {
    throw maximin::Error(maximin::ErrorCode::kInvalidArgument,
                         "verify needs an allocation (in the instance file "
                         "or through --allocation)");
  }
  const maximin::SolutionReport report = maximin::EvaluateAllocation(
      problem, *problem.allocation,
      maximin::DefaultGuarantee(problem, maximin::ParseValue(f.delta)),
      f.oracle_budget);
  maximin::WriteTextFile(f.output, Render(f, report));
  return report.pass ? kOk : kViolation;
}

int Generate(const Flags& f) {
  const maximin::GeneratorKind kind = maximin::ParseGeneratorKind(f.kind);
  maximin::GeneratorSpec spec = maximin::DefaultSpec(kind, f.n, f.m, f.seed);
  if (f.range_given) {
    spec.lo = f.lo;
    spec.hi = f.hi;
  }
  spec.identical = f.identical;
  spec.distinct = f.distinct;
  spec.elements = f.elements;
  const maximin::Problem problem = std::visit(
      [](auto&& generated) { return maximin::MakeProblem(std::move(generated)); },
      maximin::Generate(spec));
  maximin::WriteTextFile(f.output, maximin::SerializeProblem(problem));
  return kOk;
}

int Fixture(const Flags& f) {
  maximin::Problem problem;
  if (f.name == "ef1-not-mms") {
    maximin::Ef1Fixture fx = maximin::FixtureEf1NotMms(f.n);
    problem = maximin::MakeProblem(std::move(fx.instance));
    problem.allocation = std::move(fx.allocation);
  } else {
    std::vector<maximin::ValuationPtr> vals;
    for (auto& t : maximin::FixtureSubmodularGap()) vals.push_back(t);
    problem = maximin::MakeProblem(std::move(vals));
    problem.good_names = {"a1", "a2", "b1", "b2"};
  }
  maximin::WriteTextFile(f.output, maximin::SerializeProblem(problem));
  return kOk;
}

int Sweep(const Flags& f) {
  auto runs = maximin::ParseSweepConfig(maximin::ReadTextFile(f.input));
  for (auto& run : runs) {
    if (f.seed_given) run.seed = f.seed;
    if (f.budget_given) run.budget = f.oracle_budget;
  }
  const std::size_t jobs =
      f.jobs != 0 ? f.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<maximin::SweepSummary> summaries;
  std::size_t violations = 0;
  for (const auto& run : runs) {
    summaries.push_back(maximin::RunSweep(run, jobs));
    violations += summaries.back().violations;
  }
  maximin::WriteTextFile(f.output, f.format == "table"
                                       ? maximin::SweepTable(summaries)
                                       : maximin::SweepJson(summaries));
  return violations == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate maximin-share allocation of indivisible items"};
  app.require_subcommand(1);
  Flags f;

  for (const char* name : {"solve-additive", "solve-chores", "solve-submodular"}) {
    CLI::App* cmd = app.add_subcommand(name, std::string("Run ") + name + " and check its guarantee");
    AddInput(cmd, f);
    AddFormat(cmd, f);
    cmd->add_option("--delta", f.delta, "Threshold decay step P/Q (submodular)");
    cmd->add_option("--oracle-budget", f.oracle_budget, "Exact share oracle budget");
  }
  CLI::App* exact = app.add_subcommand("mms-exact", "Exact maximin shares");
  AddInput(exact, f);
  AddFormat(exact, f);
  exact->add_option("--oracle-budget", f.oracle_budget, "Exact share oracle budget");

  CLI::App* approx = app.add_subcommand("mms-approx", "1/9-approximate maximin shares");
  AddInput(approx, f);
  AddFormat(approx, f);
  approx->add_option("--epsilon", f.epsilon, "Binary search precision P/Q");
  approx->add_option("--matroid-solver", f.matroid_solver, "Slot assignment solver")
      ->check(CLI::IsMember({"exhaustive", "greedy"}));

  CLI::App* verify = app.add_subcommand("verify", "Check an allocation against its guarantee");
  AddInput(verify, f);
  AddFormat(verify, f);
  verify->add_option("--allocation", f.allocation, "JSON bundle list overriding the file's");
  verify->add_option("--delta", f.delta, "Threshold decay step P/Q (submodular)");
  verify->add_option("--oracle-budget", f.oracle_budget, "Exact share oracle budget");

  CLI::App* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--kind", f.kind, "Generator family")
      ->check(CLI::IsMember({"uniform-additive", "ordered-additive", "chores",
                             "coverage", "budget-additive", "explicit"}));
  generate->add_option("--n", f.n, "Agents");
  generate->add_option("--m", f.m, "Goods");
  generate->add_option("--seed", f.seed, "Random seed");
  auto* lo = generate->add_option("--lo", f.lo, "Smallest value");
  auto* hi = generate->add_option("--hi", f.hi, "Largest value");
  lo->needs(hi);
  hi->needs(lo);
  generate->add_flag("--identical", f.identical, "Same valuation for every agent");
  generate->add_flag("--distinct", f.distinct, "Distinct values (ordered-additive)");
  generate->add_option("--elements", f.elements, "Coverage universe size");
  generate->add_option("--output", f.output, "Output file ('-' for stdout)");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write a named counterexample instance");
  fixtures->add_option("--name", f.name, "Fixture")
      ->required()
      ->check(CLI::IsMember({"ef1-not-mms", "submodular-gap"}));
  fixtures->add_option("--n", f.n, "Agents (ef1-not-mms)");
  fixtures->add_option("--output", f.output, "Output file ('-' for stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "Run batch guarantee checks from a config");
  AddInput(sweep, f, "Sweep config file ('-' for stdin)");
  AddFormat(sweep, f);
  sweep->add_option("--jobs", f.jobs, "Worker threads (default: all cores)");
  sweep->add_option("--seed", f.seed, "Base seed for every run in the config");
  sweep->add_option("--oracle-budget", f.oracle_budget, "Exact share oracle budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  f.range_given = generate->count("--lo") > 0;
  f.seed_given = sweep->count("--seed") > 0;
  f.budget_given = sweep->count("--oracle-budget") > 0;

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name.rfind("solve-", 0) == 0) return Solve(f, name);
    if (name == "mms-exact") {
      const auto report = maximin::ExactShares(maximin::ReadProblemFile(f.input),
                                               f.oracle_budget);
      maximin::WriteTextFile(f.output, Render(f, report));
      return kOk;
    }
    if (name == "mms-approx") {
      const auto report =
          maximin::ApproxShares(maximin::ReadProblemFile(f.input), *MakeSolver(f),
                                maximin::ParseValue(f.epsilon));
      maximin::WriteTextFile(f.output, Render(f, report));
      return kOk;
    }
    if (name == "verify") return Verify(f);
    if (name == "generate") return Generate(f);
    if (name == "fixtures") return Fixture(f);
    return Sweep(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
