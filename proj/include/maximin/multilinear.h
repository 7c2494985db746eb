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

#ifndef MAXIMIN_MULTILINEAR_H_
#define MAXIMIN_MULTILINEAR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maximin/submodular.h"

namespace maximin {

inline constexpr std::size_t kMaxExactMultilinearGoods = 20;

// F(x) = sum over R of f(R) prod_{j in R} x_j prod_{j not in R} (1 - x_j),
// evaluated exactly. Only coordinates strictly between 0 and 1 are
// enumerated; m <= 20.
Value MultilinearExact(const SubmodularValuation& f, const std::vector<Value>& x);

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  std::size_t samples = 0;
};

// Seeded Monte Carlo estimate of F(x) with its sample standard error.
MonteCarloEstimate MultilinearMonteCarlo(const SubmodularValuation& f,
                                         const std::vector<Value>& x,
                                         std::size_t samples,
                                         std::uint64_t seed);

// gamma_j^{H,J}(x) = E_{R~x}[ f_{H + (R & {j' in J : j' < j})}(j) ],
// exact by enumerating the lower-indexed part of J.
Value ExpectedOrderedMarginal(const SubmodularValuation& f, GoodMask anchor,
                              GoodMask order_set, std::size_t good,
                              const std::vector<Value>& x);

// Rational upper bound on 1 - 1/e (= 0.63212...), so a comparison against it
// errs on the strict side.
inline Value OneMinusInvEUpper() { return Value(3161, 5000); }  // 0.6322

struct ProportionalityEntry {
  std::size_t agent = 0;
  Value uniform_value;  // V_i(1/n, ..., 1/n)
  Value bound;          // OneMinusInvEUpper() * mu_i
  bool ok = false;
};

struct ProportionalityReport {
  bool ok = true;
  std::vector<ProportionalityEntry> entries;
};

// Checks V_i(u) >= (1 - 1/e) mu_i for the uniform fractional allocation u.
ProportionalityReport ProportionalityCheck(
    const std::vector<ValuationPtr>& valuations, const std::vector<Value>& mu);

}  // namespace maximin

#endif  // MAXIMIN_MULTILINEAR_H_
