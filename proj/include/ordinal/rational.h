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

#ifndef ORDINAL_RATIONAL_H_
#define ORDINAL_RATIONAL_H_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordinal {

// Exact rational used for every synaptic weight. Dyadic tree weights reach
// denominators of 2^64 at the supported depth, past what a pair of machine
// words can multiply without overflow.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

// Returns num/den in lowest terms. den must be nonzero.
Rational MakeRational(long long num, long long den);

// Formats as "p/q" with q >= 1 (integers keep the "/1").
std::string FormatRational(const Rational& r);

// Parses "p/q" or a bare integer "p". Throws Error(kParseError) otherwise.
Rational ParseRational(const std::string& text);

double ToDouble(const Rational& r);

}  // namespace ordinal

#endif  // ORDINAL_RATIONAL_H_
