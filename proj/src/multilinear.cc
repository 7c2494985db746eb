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

#include "maximin/multilinear.h"

#include <cmath>
#include <string>

#include "maximin/rng.h"

namespace maximin {

namespace {

void CheckPoint(const SubmodularValuation& f, const std::vector<Value>& x) {
  if (x.size() != f.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(x.size()) + " coordinates for " +
                    std::to_string(f.ground_size()) + " goods");
  }
  for (const Value& xj : x) {
    if (xj < 0 || xj > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coordinates must lie in [0, 1]");
    }
  }
}

// Sum over subsets R of `free` of prob(R) * term(sure | R), where sure goods
// are always present and free goods appear independently.
template <typename Term>
Value ExpectOverSubsets(GoodMask sure, const std::vector<std::size_t>& free,
                        const std::vector<Value>& x, Term term) {
  if (free.size() > kMaxExactMultilinearGoods) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(free.size()) +
                    " fractional coordinates exceed the exact limit of 20; "
                    "use MultilinearMonteCarlo");
  }
  Value total = 0;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  for (std::uint64_t r = 0; r < count; ++r) {
    Value prob = 1;
    GoodMask set = sure;
    for (std::size_t k = 0; k < free.size(); ++k) {
      const std::size_t j = free[k];
      if (r & (std::uint64_t{1} << k)) {
        prob *= x[j];
        set |= Bit(j);
      } else {
        prob *= 1 - x[j];
      }
    }
    total += prob * term(set);
  }
  return total;
}

}  // namespace

Value MultilinearExact(const SubmodularValuation& f,
                       const std::vector<Value>& x) {
  CheckPoint(f, x);
  if (f.ground_size() > kMaxExactMultilinearGoods) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exact multilinear extension is limited to 20 goods; use "
                "MultilinearMonteCarlo");
  }
  GoodMask sure = 0;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 1) {
      sure |= Bit(j);
    } else if (x[j] > 0) {
      free.push_back(j);
    }
  }
  return ExpectOverSubsets(sure, free, x,
                           [&](GoodMask s) { return f.Evaluate(s); });
}

MonteCarloEstimate MultilinearMonteCarlo(const SubmodularValuation& f,
                                         const std::vector<Value>& x,
                                         std::size_t samples,
                                         std::uint64_t seed) {
  CheckPoint(f, x);
  if (samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  }
  std::vector<double> p(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) p[j] = ToDouble(x[j]);

  Rng rng(seed);
  // Welford's running mean and variance.
  double mean = 0, m2 = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    GoodMask set = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (rng.Bernoulli(p[j])) set |= Bit(j);
    }
    const double value = ToDouble(f.Evaluate(set));
    const double d = value - mean;
    mean += d / static_cast<double>(s + 1);
    m2 += d * (value - mean);
  }
  MonteCarloEstimate out;
  out.estimate = mean;
  out.samples = samples;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

Value ExpectedOrderedMarginal(const SubmodularValuation& f, GoodMask anchor,
                              GoodMask order_set, std::size_t good,
                              const std::vector<Value>& x) {
  CheckPoint(f, x);
  if (good >= f.ground_size() || (order_set & Bit(good)) == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "the good must belong to the ordering set J");
  }
  const GoodMask prefix = order_set & (Bit(good) - 1);
  GoodMask sure = 0;
  std::vector<std::size_t> free;
  for (std::size_t j : GoodsOf(prefix)) {
    if (x[j] == 1) {
      sure |= Bit(j);
    } else if (x[j] > 0) {
      free.push_back(j);
    }
  }
  return ExpectOverSubsets(sure, free, x, [&](GoodMask r) {
    return f.Marginal(anchor | r, good);
  });
}

ProportionalityReport ProportionalityCheck(
    const std::vector<ValuationPtr>& valuations, const std::vector<Value>& mu) {
  if (valuations.size() != mu.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one maximin share per agent is required");
  }
  ProportionalityReport report;
  const std::size_t n = valuations.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = valuations[i]->ground_size();
    const std::vector<Value> u(m, Value(1, static_cast<unsigned long>(n)));
    ProportionalityEntry entry;
    entry.agent = i;
    entry.uniform_value = MultilinearExact(*valuations[i], u);
    entry.bound = OneMinusInvEUpper() * mu[i];
    entry.ok = entry.uniform_value >= entry.bound;
    report.ok = report.ok && entry.ok;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace maximin
