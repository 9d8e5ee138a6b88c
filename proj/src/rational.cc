// Copyright 2026 The Ordinal Codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ordinal/rational.h"

#include <cstddef>

#include "ordinal/error.h"

namespace ordinal {

Rational MakeRational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return Rational(num, den);
}

std::string FormatRational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational ParseRational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (part.size() == start) {
      throw Error(ErrorCode::kParseError, "bad rational: '" + text + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(ErrorCode::kParseError, "bad rational: '" + text + "'");
      }
    }
    return cpp_int(part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  cpp_int num = parse_int(text.substr(0, slash));
  cpp_int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator: '" + text + "'");
  }
  return Rational(num, den);
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ordinal
