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

#include "maximin/report.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "maximin/chores.h"
#include "maximin/envy_graph.h"
#include "maximin/rng.h"
#include "maximin/round_robin.h"

namespace maximin {
namespace {

using nlohmann::json;

json ValueJson(const Value& v) { return FormatValue(v); }

template <typename T>
json OptionalJson(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Value>) {
    return ValueJson(*v);
  } else {
    return *v;
  }
}

std::string OptionalText(const std::optional<Value>& v) {
  return v ? FormatValue(*v) : std::string("-");
}

std::string OkText(const std::optional<bool>& ok) {
  return !ok ? "?" : (*ok ? "ok" : "FAIL");
}

Value AgentValue(const Problem& p, std::size_t agent, const Bundle& bundle) {
  if (p.additive) return BundleValue(*p.additive, agent, bundle);
  return p.valuations[agent]->Evaluate(bundle);
}

// Exact share per agent, reusing results for agents that share a valuation.
class ShareCache {
 public:
  ShareCache(const Problem& p, std::uint64_t budget) : p_(p), budget_(budget) {}

  // nullopt with `error` set when the oracle refuses.
  std::optional<MmsCertificate> Get(std::size_t agent, std::string* error) {
    const void* key = p_.additive ? static_cast<const void*>(&p_.additive->values()[agent])
                                  : static_cast<const void*>(p_.valuations[agent].get());
    if (auto it = done_.find(key); it != done_.end()) {
      MmsCertificate copy = it->second;
      copy.agent = agent;
      return copy;
    }
    try {
      MmsCertificate cert =
          p_.additive ? MmsExactAdditive(*p_.additive, agent, budget_)
                      : MmsExactSubmodular(*p_.valuations[agent], p_.n, budget_);
      cert.agent = agent;
      if (!p_.additive) done_.emplace(key, cert);
      return cert;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      if (error) *error = e.detail();
      return std::nullopt;
    }
  }

 private:
  const Problem& p_;
  std::uint64_t budget_;
  std::map<const void*, MmsCertificate> done_;
};

json ProblemJson(const Problem& p) { return json::parse(SerializeProblem(p)); }

}  // namespace

std::string MuSourceName(MuSource source) {
  switch (source) {
    case MuSource::kExact: return "exact";
    case MuSource::kCertifiedLowerBound: return "certified-lower-bound";
    case MuSource::kUnavailable: return "unavailable";
  }
  return "unavailable";
}

Guarantee AdditiveGuarantee(std::size_t n) {
  const auto k = static_cast<long>(n);
  return {"2n/(3n-1)", Ratio(2 * k, 3 * k - 1)};
}

Guarantee ChoresGuarantee(std::size_t n) {
  const auto k = static_cast<long>(n);
  return {"(4n-1)/(3n)", Ratio(4 * k - 1, 3 * k)};
}

Guarantee SubmodularGuarantee(const Value& delta) {
  Value alpha = 1 / (10 * (1 + delta));
  return {"1/(10(1+delta))", alpha};
}

Guarantee DefaultGuarantee(const Problem& problem, const Value& delta) {
  switch (problem.kind) {
    case ProblemKind::kAdditiveGoods: return AdditiveGuarantee(problem.n);
    case ProblemKind::kAdditiveChores: return ChoresGuarantee(problem.n);
    case ProblemKind::kSubmodular: return SubmodularGuarantee(delta);
  }
  return AdditiveGuarantee(problem.n);
}

SolutionReport EvaluateAllocation(const Problem& problem,
                                  const Allocation& allocation,
                                  const Guarantee& guarantee,
                                  std::uint64_t budget) {
  if (allocation.agents() != problem.n || allocation.universe() != problem.m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "allocation does not match the instance");
  }
  SolutionReport report{"verify", guarantee, problem, allocation,
                        allocation.complete(), {}, {}, {}, false, {}};
  ShareCache shares(problem, budget);
  bool violated = false;
  for (std::size_t i = 0; i < problem.n; ++i) {
    AgentReport a;
    a.agent = i;
    a.value = AgentValue(problem, i, allocation.bundle(i));
    std::string error;
    if (auto cert = shares.Get(i, &error)) {
      a.mu = cert->value;
      a.source = MuSource::kExact;
      a.required = guarantee.alpha * *a.mu;
      a.ok = a.value >= *a.required;
      if (*a.mu != 0) a.ratio = a.value / *a.mu;
      violated |= !*a.ok;
    } else {
      report.notes.emplace_back("agent " + std::to_string(i), error);
    }
    report.agents.push_back(std::move(a));
  }
  if (problem.kind == ProblemKind::kAdditiveGoods) {
    report.ef1 = IsEf1(*problem.additive, allocation);
    report.efx = IsEfx(*problem.additive, allocation);
  }
  report.pass = report.complete && !violated;
  return report;
}

SolutionReport SolveAndReport(const Problem& problem, const std::string& command,
                              const SolveOptions& options) {
  auto expect = [&](bool ok, const char* what) {
    if (!ok) {
      throw Error(ErrorCode::kInvalidArgument,
                  command + " needs " + what + ", got " +
                      ProblemKindName(problem.kind));
    }
  };
  SolutionReport report{command, {}, problem, Allocation(problem.n, problem.m),
                        false, {}, {}, {}, false, {}};
  std::vector<std::pair<std::string, std::string>> notes;
  if (command == "solve-additive") {
    expect(problem.kind == ProblemKind::kAdditiveGoods, "an additive-goods instance");
    report = EvaluateAllocation(problem, SolveAdditive(*problem.additive),
                                AdditiveGuarantee(problem.n), options.budget);
  } else if (command == "solve-chores") {
    expect(problem.kind == ProblemKind::kAdditiveChores, "an additive-chores instance");
    report = EvaluateAllocation(problem, SolveChores(*problem.additive),
                                ChoresGuarantee(problem.n), options.budget);
  } else if (command == "solve-submodular") {
    expect(problem.kind != ProblemKind::kAdditiveChores, "goods");
    const AlgSubResult result = AlgSub(ValuationsOf(problem), options.delta);
    std::size_t decays = 0;
    for (std::size_t d : result.state.decays) decays += d;
    notes.emplace_back("rounds", std::to_string(result.state.rounds));
    notes.emplace_back("threshold decays", std::to_string(decays));
    report = EvaluateAllocation(problem, result.allocation,
                                SubmodularGuarantee(options.delta), options.budget);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown solver '" + command + "'");
  }
  report.command = command;
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  return report;
}

ShareReport ExactShares(const Problem& problem, std::uint64_t budget) {
  ShareReport report{"mms-exact", problem, {}};
  ShareCache shares(problem, budget);
  for (std::size_t i = 0; i < problem.n; ++i) {
    ShareEntry e;
    e.agent = i;
    if (auto cert = shares.Get(i, &e.error)) {
      e.mu = cert->value;
      e.source = MuSource::kExact;
      e.witness = cert->witness;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

ShareReport ApproxShares(const Problem& problem, const MatroidSolver& solver,
                         const Value& epsilon) {
  if (problem.kind == ProblemKind::kAdditiveChores) {
    throw Error(ErrorCode::kInvalidArgument,
                "the approximate share oracle handles goods only");
  }
  ShareReport report{"mms-approx", problem, {}};
  const std::vector<ValuationPtr> valuations = ValuationsOf(problem);
  for (std::size_t i = 0; i < problem.n; ++i) {
    const ApproxMmsResult r =
        MmsApproxSubmodular(*valuations[i], problem.n, solver, epsilon);
    ShareEntry e;
    e.agent = i;
    Value low = valuations[i]->Evaluate(r.partition.bundle(0));
    for (const Bundle& b : r.partition.bundles()) {
      low = Min(low, valuations[i]->Evaluate(b));
    }
    e.mu = low;
    e.source = MuSource::kCertifiedLowerBound;
    e.witness = r.partition;
    e.threshold = r.threshold;
    e.certified = r.certified;
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string ReportJson(const SolutionReport& r) {
  json agents = json::array();
  for (const AgentReport& a : r.agents) {
    agents.push_back({{"agent", a.agent},
                      {"value", ValueJson(a.value)},
                      {"mu", OptionalJson(a.mu)},
                      {"mu_source", MuSourceName(a.source)},
                      {"ratio", OptionalJson(a.ratio)},
                      {"required", OptionalJson(a.required)},
                      {"ok", OptionalJson(a.ok)}});
  }
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  json doc = {{"command", r.command},
              {"guarantee", {{"label", r.guarantee.label},
                             {"alpha", ValueJson(r.guarantee.alpha)}}},
              {"instance", ProblemJson(r.problem)},
              {"allocation", r.allocation.bundles()},
              {"complete", r.complete},
              {"agents", std::move(agents)},
              {"ef1", OptionalJson(r.ef1)},
              {"efx", OptionalJson(r.efx)},
              {"pass", r.pass},
              {"notes", std::move(notes)}};
  return doc.dump(2) + "\n";
}

std::string ReportTable(const SolutionReport& r) {
  std::ostringstream out;
  out << r.command << "  " << ProblemKindName(r.problem.kind) << "  n=" << r.problem.n
      << " m=" << r.problem.m << "  guarantee " << r.guarantee.label << " = "
      << FormatValue(r.guarantee.alpha) << "\n";
  out << std::left << std::setw(6) << "agent" << std::setw(24) << "bundle"
      << std::setw(12) << "value" << std::setw(12) << "mu" << std::setw(12)
      << "ratio" << "ok\n";
  for (const AgentReport& a : r.agents) {
    std::string bundle;
    for (std::size_t g : r.allocation.bundle(a.agent)) {
      bundle += (bundle.empty() ? "" : ",") + std::to_string(g);
    }
    out << std::setw(6) << a.agent << std::setw(24) << ("{" + bundle + "}")
        << std::setw(12) << FormatValue(a.value) << std::setw(12)
        << OptionalText(a.mu) << std::setw(12) << OptionalText(a.ratio)
        << OkText(a.ok) << "\n";
  }
  if (r.ef1) out << "ef1: " << (*r.ef1 ? "yes" : "no") << "  efx: " << (*r.efx ? "yes" : "no") << "\n";
  for (const auto& [k, v] : r.notes) out << k << ": " << v << "\n";
  out << (r.complete ? "" : "allocation is incomplete\n")
      << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string ReportJson(const ShareReport& r) {
  json entries = json::array();
  for (const ShareEntry& e : r.entries) {
    json j = {{"agent", e.agent},
              {"mu", OptionalJson(e.mu)},
              {"mu_source", MuSourceName(e.source)}};
    j["witness"] = e.witness ? json(e.witness->bundles()) : json(nullptr);
    if (e.threshold) j["threshold"] = ValueJson(*e.threshold);
    if (e.certified) j["certified"] = *e.certified;
    if (!e.error.empty()) j["error"] = e.error;
    entries.push_back(std::move(j));
  }
  json doc = {{"command", r.command},
              {"kind", ProblemKindName(r.problem.kind)},
              {"n", r.problem.n},
              {"m", r.problem.m},
              {"agents", std::move(entries)}};
  return doc.dump(2) + "\n";
}

std::string ReportTable(const ShareReport& r) {
  std::ostringstream out;
  out << r.command << "  " << ProblemKindName(r.problem.kind) << "  n=" << r.problem.n
      << " m=" << r.problem.m << "\n";
  for (const ShareEntry& e : r.entries) {
    out << "agent " << e.agent << ": mu " << OptionalText(e.mu) << " ("
        << MuSourceName(e.source) << ")";
    if (e.threshold) out << " threshold " << FormatValue(*e.threshold);
    if (e.witness) {
      out << " partition";
      for (const Bundle& b : e.witness->bundles()) {
        std::string s;
        for (std::size_t g : b) s += (s.empty() ? "" : ",") + std::to_string(g);
        out << " {" << s << "}";
      }
    }
    if (!e.error.empty()) out << " [" << e.error << "]";
    out << "\n";
  }
  return out.str();
}

std::string SweepCheckName(SweepCheck check) {
  switch (check) {
    case SweepCheck::kAdditive: return "additive";
    case SweepCheck::kChores: return "chores";
    case SweepCheck::kSubmodular: return "submodular";
    case SweepCheck::kMmsApprox: return "mms-approx";
  }
  return "additive";
}

namespace {

SweepCheck ParseSweepCheck(const std::string& name) {
  for (SweepCheck c : {SweepCheck::kAdditive, SweepCheck::kChores,
                       SweepCheck::kSubmodular, SweepCheck::kMmsApprox}) {
    if (SweepCheckName(c) == name) return c;
  }
  throw Error(ErrorCode::kParse, "unknown sweep check '" + name + "'");
}

std::vector<GeneratorKind> DefaultKinds(SweepCheck check) {
  switch (check) {
    case SweepCheck::kAdditive: return {GeneratorKind::kUniformAdditive};
    case SweepCheck::kChores: return {GeneratorKind::kChores};
    default:
      return {GeneratorKind::kCoverage, GeneratorKind::kBudgetAdditive,
              GeneratorKind::kExplicit};
  }
}

struct Checked {
  std::vector<Value> values, mus;
  Value alpha;
};

Checked CheckInstance(const SweepRun& run, const GeneratorSpec& spec) {
  Checked c;
  switch (run.check) {
    case SweepCheck::kAdditive:
    case SweepCheck::kChores: {
      const AdditiveInstance inst = GenerateAdditive(spec);
      const bool chores = run.check == SweepCheck::kChores;
      const Allocation a = chores ? SolveChores(inst) : SolveAdditive(inst);
      c.alpha = chores ? ChoresGuarantee(spec.n).alpha : AdditiveGuarantee(spec.n).alpha;
      for (std::size_t i = 0; i < spec.n; ++i) {
        c.values.push_back(BundleValue(inst, i, a.bundle(i)));
        c.mus.push_back(MmsExactAdditive(inst, i, run.budget).value);
      }
      break;
    }
    case SweepCheck::kSubmodular: {
      const auto vals = GenerateSubmodular(spec);
      const AlgSubResult r = AlgSub(vals, run.delta);
      c.alpha = SubmodularGuarantee(run.delta).alpha;
      for (std::size_t i = 0; i < spec.n; ++i) {
        c.values.push_back(vals[i]->Evaluate(r.allocation.bundle(i)));
        c.mus.push_back(MmsExactSubmodular(*vals[i], spec.n, run.budget).value);
      }
      break;
    }
    case SweepCheck::kMmsApprox: {
      GeneratorSpec same = spec;
      same.identical = true;
      const auto vals = GenerateSubmodular(same);
      std::unique_ptr<MatroidSolver> solver;
      if (run.solver == "greedy") {
        solver = std::make_unique<GreedyMatroidSolver>();
      } else {
        solver = std::make_unique<ExhaustiveMatroidSolver>();
      }
      const ApproxMmsResult r =
          MmsApproxSubmodular(*vals[0], spec.n, *solver, run.epsilon);
      const Value mu = MmsExactSubmodular(*vals[0], spec.n, run.budget).value;
      c.alpha = Value(1, 9);
      for (const Bundle& b : r.partition.bundles()) {
        c.values.push_back(vals[0]->Evaluate(b));
        c.mus.push_back(mu);
      }
      break;
    }
  }
  return c;
}

}  // namespace

std::vector<SweepRun> ParseSweepConfig(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw Error(ErrorCode::kParse, "/runs: expected an array of runs");
  }
  std::vector<SweepRun> runs;
  for (std::size_t k = 0; k < doc["runs"].size(); ++k) {
    const json& j = doc["runs"][k];
    const std::string path = "/runs/" + std::to_string(k);
    try {
      SweepRun run;
      run.check = ParseSweepCheck(j.at("check").get<std::string>());
      run.name = j.value("name", SweepCheckName(run.check));
      if (j.contains("kinds")) {
        for (const auto& kind : j["kinds"]) {
          run.kinds.push_back(ParseGeneratorKind(kind.get<std::string>()));
        }
      } else {
        run.kinds = DefaultKinds(run.check);
      }
      if (run.check == SweepCheck::kChores) {
        run.lo = -100;
        run.hi = 0;
      }
      run.count = j.value("count", run.count);
      if (j.contains("n")) {
        run.n_lo = j["n"].at(0).get<std::size_t>();
        run.n_hi = j["n"].at(1).get<std::size_t>();
      }
      if (j.contains("m")) {
        run.m_lo = j["m"].at(0).get<std::size_t>();
        run.m_hi = j["m"].at(1).get<std::size_t>();
      }
      if (j.contains("range")) {
        run.lo = j["range"].at(0).get<std::int64_t>();
        run.hi = j["range"].at(1).get<std::int64_t>();
      }
      run.identical = j.value("identical", false);
      run.seed = j.value("seed", run.seed);
      if (j.contains("delta")) run.delta = ParseValue(j["delta"].get<std::string>());
      if (j.contains("epsilon")) run.epsilon = ParseValue(j["epsilon"].get<std::string>());
      run.solver = j.value("solver", run.solver);
      run.budget = j.value("oracle_budget", run.budget);
      if (run.n_lo == 0 || run.n_lo > run.n_hi || run.m_lo > run.m_hi ||
          run.n_lo > run.m_hi || run.kinds.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "inconsistent size ranges");
      }
      runs.push_back(std::move(run));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, path + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, path + ": " + e.detail());
    }
  }
  return runs;
}

SweepSummary RunSweep(const SweepRun& run, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  summary.run = run;
  summary.instances.resize(run.count);
  std::vector<Value> alphas(run.count);
  std::vector<std::string> failures(run.count);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < run.count;) {
      SweepInstance& inst = summary.instances[k];
      inst.seed = run.seed + k;
      Rng rng(inst.seed);
      inst.n = static_cast<std::size_t>(rng.UniformInt(
          static_cast<std::int64_t>(run.n_lo), static_cast<std::int64_t>(run.n_hi)));
      inst.m = static_cast<std::size_t>(rng.UniformInt(
          static_cast<std::int64_t>(std::max(inst.n, run.m_lo)),
          static_cast<std::int64_t>(std::max(inst.n, run.m_hi))));
      GeneratorSpec spec = DefaultSpec(run.kinds[k % run.kinds.size()], inst.n,
                                       inst.m, rng.Next());
      spec.lo = run.lo;
      spec.hi = run.hi;
      spec.identical = run.identical;
      try {
        const Checked c = CheckInstance(run, spec);
        alphas[k] = c.alpha;
        for (std::size_t i = 0; i < c.values.size(); ++i) {
          if (!(c.values[i] >= c.alpha * c.mus[i])) ++inst.violations;
          if (c.mus[i] != 0) inst.ratios.push_back(c.values[i] / c.mus[i]);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) {
          failures[k] = e.what();
        } else {
          inst.unavailable = inst.n;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const std::string& f : failures) {
    if (!f.empty()) throw Error(ErrorCode::kPreconditionViolated, f);
  }

  const bool chores = run.check == SweepCheck::kChores;
  double sum = 0;
  std::size_t counted = 0;
  for (std::size_t k = 0; k < run.count; ++k) {
    const SweepInstance& inst = summary.instances[k];
    summary.violations += inst.violations;
    summary.unavailable += inst.unavailable;
    if (inst.unavailable == 0) {
      summary.agents_checked += run.check == SweepCheck::kMmsApprox ? 1 : inst.n;
      if (k == 0 || (chores ? alphas[k] > summary.weakest_alpha
                            : alphas[k] < summary.weakest_alpha)) {
        summary.weakest_alpha = alphas[k];
      }
    }
    for (const Value& r : inst.ratios) {
      if (!summary.worst_ratio ||
          (chores ? r > *summary.worst_ratio : r < *summary.worst_ratio)) {
        summary.worst_ratio = r;
      }
      sum += ToDouble(r);
      ++counted;
    }
  }
  summary.mean_ratio = counted ? sum / static_cast<double>(counted) : 0;
  summary.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string SweepJson(const std::vector<SweepSummary>& summaries) {
  json runs = json::array();
  for (const SweepSummary& s : summaries) {
    runs.push_back({{"name", s.run.name},
                    {"check", SweepCheckName(s.run.check)},
                    {"instances", s.run.count},
                    {"agents_checked", s.agents_checked},
                    {"violations", s.violations},
                    {"unavailable", s.unavailable},
                    {"worst_ratio", OptionalJson(s.worst_ratio)},
                    {"mean_ratio", s.mean_ratio},
                    {"weakest_alpha", ValueJson(s.weakest_alpha)},
                    {"seconds", s.seconds}});
  }
  return json{{"runs", std::move(runs)}}.dump(2) + "\n";
}

std::string SweepTable(const std::vector<SweepSummary>& summaries) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "run" << std::setw(12) << "check"
      << std::setw(10) << "count" << std::setw(10) << "agents" << std::setw(12)
      << "violations" << std::setw(14) << "worst ratio" << std::setw(12)
      << "mean ratio" << "seconds\n";
  for (const SweepSummary& s : summaries) {
    std::ostringstream worst;
    if (s.worst_ratio) {
      worst << std::fixed << std::setprecision(4) << ToDouble(*s.worst_ratio);
    } else {
      worst << "-";
    }
    out << std::setw(22) << s.run.name << std::setw(12)
        << SweepCheckName(s.run.check) << std::setw(10) << s.run.count
        << std::setw(10) << s.agents_checked << std::setw(12) << s.violations
        << std::setw(14) << worst.str() << std::setw(12) << std::fixed
        << std::setprecision(4) << s.mean_ratio << std::setprecision(2)
        << s.seconds << "\n";
  }
  return out.str();
}

}  // namespace maximin
