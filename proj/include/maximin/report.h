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

#ifndef MAXIMIN_REPORT_H_
#define MAXIMIN_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maximin/core_model.h"
#include "maximin/generators.h"
#include "maximin/io.h"
#include "maximin/mms.h"

namespace maximin {

enum class MuSource { kExact, kCertifiedLowerBound, kUnavailable };
std::string MuSourceName(MuSource source);

// Every agent must get at least alpha * mu_i.
struct Guarantee {
  std::string label;
  Value alpha;
};
Guarantee AdditiveGuarantee(std::size_t n);          // 2n / (3n - 1)
Guarantee ChoresGuarantee(std::size_t n);            // (4n - 1) / (3n)
Guarantee SubmodularGuarantee(const Value& delta);   // 1 / (10 (1 + delta))
// The guarantee of the solver matching the problem kind.
Guarantee DefaultGuarantee(const Problem& problem, const Value& delta);

struct AgentReport {
  std::size_t agent = 0;
  Value value;
  std::optional<Value> mu;
  MuSource source = MuSource::kUnavailable;
  std::optional<Value> ratio;     // value / mu, when mu != 0
  std::optional<Value> required;  // alpha * mu
  std::optional<bool> ok;         // unknown without mu
};

struct SolutionReport {
  std::string command;
  Guarantee guarantee;
  Problem problem;
  Allocation allocation;
  bool complete = false;
  std::vector<AgentReport> agents;
  std::optional<bool> ef1;  // additive goods only; chores are judged by ratio
  std::optional<bool> efx;
  // Complete and no agent below its requirement. Agents whose share could not
  // be computed do not fail the report.
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> notes;
};

// Recomputes every value from the allocation itself; shares come from the
// exact oracles and are marked unavailable when the budget is exceeded.
SolutionReport EvaluateAllocation(const Problem& problem,
                                  const Allocation& allocation,
                                  const Guarantee& guarantee,
                                  std::uint64_t budget = kDefaultOracleBudget);

struct SolveOptions {
  Value delta = Value(1, 20);
  std::uint64_t budget = kDefaultOracleBudget;
};

// command is "solve-additive", "solve-chores" or "solve-submodular".
SolutionReport SolveAndReport(const Problem& problem, const std::string& command,
                              const SolveOptions& options = {});

struct ShareEntry {
  std::size_t agent = 0;
  std::optional<Value> mu;
  MuSource source = MuSource::kUnavailable;
  std::optional<Allocation> witness;
  std::optional<Value> threshold;  // approximate oracle only
  std::optional<bool> certified;   // approximate oracle only
  std::string error;
};

struct ShareReport {
  std::string command;
  Problem problem;
  std::vector<ShareEntry> entries;
};

ShareReport ExactShares(const Problem& problem,
                        std::uint64_t budget = kDefaultOracleBudget);
// Needs monotone valuations. mu is the value of the worst bundle of the
// partition found, a lower bound on the true share.
ShareReport ApproxShares(const Problem& problem, const MatroidSolver& solver,
                         const Value& epsilon);

std::string ReportJson(const SolutionReport& report);
std::string ReportTable(const SolutionReport& report);
std::string ReportJson(const ShareReport& report);
std::string ReportTable(const ShareReport& report);

// Batch checks of one guarantee over seeded random instances.
enum class SweepCheck { kAdditive, kChores, kSubmodular, kMmsApprox };
std::string SweepCheckName(SweepCheck check);

struct SweepRun {
  std::string name;
  SweepCheck check = SweepCheck::kAdditive;
  std::vector<GeneratorKind> kinds;  // cycled through by instance index
  std::size_t count = 10;
  std::size_t n_lo = 2, n_hi = 3;
  std::size_t m_lo = 2, m_hi = 8;   // m is drawn from [max(n, m_lo), m_hi]
  std::int64_t lo = 0, hi = 100;
  bool identical = false;
  std::uint64_t seed = 1;
  Value delta = Value(1, 20);
  Value epsilon = Value(1, 100);
  std::string solver = "exhaustive";
  std::uint64_t budget = kDefaultOracleBudget;
};

struct SweepInstance {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  std::size_t violations = 0;
  std::size_t unavailable = 0;
  std::vector<Value> ratios;  // value / mu over agents with mu != 0
};

struct SweepSummary {
  SweepRun run;
  std::vector<SweepInstance> instances;  // sorted by seed
  std::size_t agents_checked = 0;
  std::size_t violations = 0;
  std::size_t unavailable = 0;
  std::optional<Value> worst_ratio;  // lowest for goods, highest for chores
  double mean_ratio = 0;
  Value weakest_alpha;  // smallest alpha for goods, largest for chores
  double seconds = 0;
};

// Config JSON: {"runs": [{"name": ..., "check": "additive" | "chores" |
// "submodular" | "mms-approx", "kinds": [...], "count": 200, "n": [2, 5],
// "m": [2, 12], "range": [0, 100], "identical": false, "seed": 1,
// "delta": "1/20", "epsilon": "1/100", "solver": "exhaustive"}]}.
std::vector<SweepRun> ParseSweepConfig(const std::string& text);
SweepSummary RunSweep(const SweepRun& run, std::size_t jobs = 1);
std::string SweepJson(const std::vector<SweepSummary>& summaries);
std::string SweepTable(const std::vector<SweepSummary>& summaries);

}  // namespace maximin

#endif  // MAXIMIN_REPORT_H_
