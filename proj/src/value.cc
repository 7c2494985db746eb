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

#include "maximin/value.h"

#include <cctype>

namespace maximin {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange:
      return "index out of range";
    case ErrorCode::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kPreconditionViolated:
      return "precondition violated";
    case ErrorCode::kBudgetExceeded:
      return "budget exceeded";
    case ErrorCode::kParse:
      return "parse error";
  }
  return "error";
}

namespace {

bool IsInteger(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Value ParseValue(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsInteger(num, true) || !IsInteger(den, false)) {
    throw Error(ErrorCode::kParse,
                "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class z_num(n, 10);
  mpz_class z_den(std::string(den), 10);
  if (z_den == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator: '" + std::string(text) + "'");
  }
  Value v(z_num, z_den);
  v.canonicalize();
  return v;
}

std::string FormatValue(const Value& v) { return v.get_str(10); }

double ToDouble(const Value& v) { return v.get_d(); }

Value Sum(const std::vector<Value>& values) {
  Value total = 0;
  for (const Value& v : values) total += v;
  return total;
}

Value Ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  Value v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace maximin
