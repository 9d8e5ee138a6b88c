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

#include <cstdint>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "ordinal/error.h"
#include "ordinal/random.h"

namespace ordinal {
namespace {

TEST(RationalTest, FormatsInLowestTerms) {
  EXPECT_EQ(FormatRational(MakeRational(2, 4)), "1/2");
  EXPECT_EQ(FormatRational(MakeRational(3, 1)), "3/1");
  EXPECT_EQ(FormatRational(MakeRational(-6, 9)), "-2/3");
  EXPECT_EQ(FormatRational(Rational(0)), "0/1");
}

TEST(RationalTest, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(ParseRational("3/8"), MakeRational(3, 8));
  EXPECT_EQ(ParseRational("4/8"), MakeRational(1, 2));
  EXPECT_EQ(ParseRational("5"), Rational(5));
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const std::string bad : {"", "1/0", "a/2", "1/2/3", "1.5"}) {
    EXPECT_THROW(ParseRational(bad), Error) << bad;
  }
}

TEST(RationalTest, FormatParseRoundTrip) {
  Engine engine(11);
  for (int i = 0; i < 1000; ++i) {
    const long long num = static_cast<long long>(UniformIndex(engine, 2001)) - 1000;
    const long long den = 1 + static_cast<long long>(UniformIndex(engine, 1000));
    const Rational r = MakeRational(num, den);
    EXPECT_EQ(ParseRational(FormatRational(r)), r);
  }
}

TEST(RationalTest, ToDouble) {
  EXPECT_DOUBLE_EQ(ToDouble(MakeRational(3, 8)), 0.375);
  EXPECT_DOUBLE_EQ(ToDouble(MakeRational(1, 3)), 1.0 / 3.0);
}

TEST(RandomTest, UniformIndexStaysInRangeAndIsSeeded) {
  Engine a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = UniformIndex(a, 7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, UniformIndex(b, 7));
  }
}

TEST(RandomTest, UniformUnitInHalfOpenInterval) {
  Engine engine(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = UniformUnit(engine);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomTest, SplitSeedSeparatesStreams) {
  EXPECT_EQ(SplitSeed(7, "a"), SplitSeed(7, "a"));
  EXPECT_NE(SplitSeed(7, "a"), SplitSeed(7, "b"));
  EXPECT_NE(SplitSeed(7, "a"), SplitSeed(8, "a"));
}

TEST(RandomTest, Fnv1aKnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace ordinal
