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

#ifndef MAXIMIN_VALUE_H_
#define MAXIMIN_VALUE_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "maximin/error.h"

namespace maximin {

// Exact rational. GMP keeps every result in canonical form (reduced,
// positive denominator) except after construction from a raw string, which
// ParseValue takes care of.
using Value = mpq_class;

// Accepts "p", "-p", "p/q" (q != 0). Whitespace is not allowed.
Value ParseValue(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatValue(const Value& v);

double ToDouble(const Value& v);

// num / den in canonical form; den != 0.
Value Ratio(long num, long den);

Value Sum(const std::vector<Value>& values);

inline Value Min(const Value& a, const Value& b) { return a < b ? a : b; }
inline Value Max(const Value& a, const Value& b) { return a < b ? b : a; }

}  // namespace maximin

#endif  // MAXIMIN_VALUE_H_
