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

#include "ordinal/codes.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ordinal/error.h"
#include "ordinal/random.h"
#include "ordinal/rational.h"
#include "ordinal/sequence.h"

namespace ordinal {
namespace {

using ::testing::ElementsAre;
using ::testing::ElementsAreArray;

// Comparison-counting oracle: rank = 1 + #smaller + #equal earlier.
std::vector<int> CountingRanks(const std::vector<double>& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int r = 1;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i] || (v[j] == v[i] && j < i)) ++r;
    }
    out.push_back(r);
  }
  return out;
}

// Response evaluated straight from the closed form.
Rational OracleResponse(const std::vector<int>& in, const std::vector<int>& st) {
  const long long n = static_cast<long long>(in.size());
  Rational dot = 0, norm = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    dot += MakeRational(1, n + 1 - in[i]) * MakeRational(1, n + 1 - st[i]);
    norm += MakeRational(1, (n + 1 - st[i]) * (n + 1 - st[i]));
  }
  return dot / norm;
}

std::vector<std::string> Fmt(const WeightVector& w) { return w.Formatted(); }

TEST(RankCodeTest, WorkedExample) {
  EXPECT_THAT(RankCodeOf(Sequence::FromNumbers({18, 13, 8, 14, 5, 19})).ranks(),
              ElementsAre(5, 3, 2, 4, 1, 6));
}

TEST(RankCodeTest, SortedIsIdentity) {
  EXPECT_THAT(RankCodeOf({1, 2, 3}).ranks(), ElementsAre(1, 2, 3));
}

TEST(RankCodeTest, TiesGoToEarlierPosition) {
  const std::vector<double> v = {30, 10, 20, 10};
  EXPECT_EQ(RankCodeOf(Sequence::FromNumbers(v)).ranks(), CountingRanks(v));
  EXPECT_THAT(RankCodeOf(Sequence::FromNumbers(v)).ranks(), ElementsAre(4, 1, 3, 2));
}

TEST(RankCodeTest, TokensRankLexicographically) {
  EXPECT_THAT(RankCodeOf(Sequence::FromTokens({"to", "to", "bu"})).ranks(),
              ElementsAre(2, 3, 1));
}

TEST(RankCodeTest, RandomSequencesMatchCountingOracle) {
  Engine engine(2024);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + UniformIndex(engine, kMaxOrdinalLength);
    std::vector<double> v(n);
    // Small value range forces plenty of ties.
    for (double& x : v) x = static_cast<double>(UniformIndex(engine, 20));
    const RankCode code = RankCodeOf(Sequence::FromNumbers(v));
    ASSERT_EQ(code.ranks(), CountingRanks(v));
    std::vector<int> sorted = code.ranks();
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    ASSERT_EQ(sorted, identity);
  }
}

TEST(RankCodeTest, InvariantUnderMonotoneTransforms) {
  Engine engine(99);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + UniformIndex(engine, 20);
    std::vector<double> v(n), cubed(n), shifted(n), logged(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = 1.0 + static_cast<double>(UniformIndex(engine, 1000));
      cubed[i] = v[i] * v[i] * v[i];
      shifted[i] = 3.5 * v[i] - 17.0;
      logged[i] = std::log(v[i]);
    }
    const RankCode base = RankCodeOf(Sequence::FromNumbers(v));
    EXPECT_EQ(RankCodeOf(Sequence::FromNumbers(cubed)), base);
    EXPECT_EQ(RankCodeOf(Sequence::FromNumbers(shifted)), base);
    EXPECT_EQ(RankCodeOf(Sequence::FromNumbers(logged)), base);
  }
}

TEST(RankCodeTest, RejectsInvalidPermutations) {
  EXPECT_THROW(RankCode({1, 1}), Error);
  EXPECT_THROW(RankCode({0, 1}), Error);
  EXPECT_THROW(RankCode({1, 3}), Error);
  try {
    RankCode({2, 2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidRankCode);
  }
}

TEST(RankCodeTest, RejectsEmptyAndOversized) {
  try {
    RankCode(std::vector<int>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySequence);
  }
  std::vector<int> big(kMaxOrdinalLength + 1);
  std::iota(big.begin(), big.end(), 1);
  try {
    RankCode{big};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
  EXPECT_THROW(Sequence(std::vector<Item>{}), Error);
}

TEST(RankCodeTest, PositionsByRankInvertsTheCode) {
  const RankCode code({5, 3, 2, 4, 1, 6});
  EXPECT_THAT(code.PositionsByRank(), ElementsAre(4, 2, 1, 3, 0, 5));
  EXPECT_EQ(code.ToString(), "[#5,#3,#2,#4,#1,#6]");
}

TEST(StdpWeightsTest, ClosedForm) {
  EXPECT_THAT(Fmt(StdpWeights(6)),
              ElementsAre("1/6", "1/5", "1/4", "1/3", "1/2", "1/1"));
  EXPECT_THAT(Fmt(StdpWeights(1)), ElementsAre("1/1"));
  EXPECT_THAT(Fmt(StdpWeights(3)), ElementsAre("1/3", "1/2", "1/1"));
  EXPECT_EQ(StdpWeights(3).kind, WeightKind::kTemporalStdp);
}

TEST(StdpWeightsTest, RejectsZero) {
  try {
    StdpWeights(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySequence);
  }
}

TEST(RankOrderWeightsTest, Examples) {
  EXPECT_THAT(Fmt(RankOrderWeights(RankCode({5, 3, 2, 4, 1, 6}))),
              ElementsAre("1/2", "1/4", "1/5", "1/3", "1/6", "1/1"));
  EXPECT_THAT(Fmt(RankOrderWeights(RankCode({1, 2, 3, 4}))),
              ElementsAre("1/4", "1/3", "1/2", "1/1"));
  EXPECT_THAT(Fmt(RankOrderWeights(RankCode({3, 2, 1}))),
              ElementsAre("1/1", "1/2", "1/3"));
}

TEST(RankOrderWeightsTest, ExactlyOneUnitWeightAndInjective) {
  std::vector<int> perm = {1, 2, 3, 4, 5, 6};
  std::set<std::vector<std::string>> seen;
  do {
    const WeightVector w = RankOrderWeights(RankCode(perm));
    EXPECT_EQ(std::count(w.weights.begin(), w.weights.end(), Rational(1)), 1);
    for (const Rational& x : w.weights) {
      EXPECT_GT(x, 0);
      EXPECT_LE(x, 1);
    }
    EXPECT_TRUE(seen.insert(w.Formatted()).second);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(seen.size(), 720u);
}

TEST(ResponseTest, SelfMatchIsOne) {
  const RankCode code({5, 3, 2, 4, 1, 6});
  EXPECT_EQ(Response(code, code), 1.0);
  EXPECT_EQ(ExactResponse(code, code), Rational(1));
}

TEST(ResponseTest, TwoElementSwapIsFourFifths) {
  EXPECT_EQ(ExactResponse(RankCode({2, 1}), RankCode({1, 2})), MakeRational(4, 5));
  EXPECT_DOUBLE_EQ(Response(RankCode({2, 1}), RankCode({1, 2})), 0.8);
}

TEST(ResponseTest, ReversalIsTheMinimum) {
  const RankCode stored({5, 3, 2, 4, 1, 6});
  std::vector<int> reversed;
  for (int r : stored.ranks()) reversed.push_back(7 - r);
  const Rational at_reverse = ExactResponse(RankCode(reversed), stored);
  std::vector<int> perm = {1, 2, 3, 4, 5, 6};
  int argmin_count = 0;
  do {
    const Rational r = ExactResponse(RankCode(perm), stored);
    EXPECT_GE(r, at_reverse);
    argmin_count += r == at_reverse;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(argmin_count, 1);
}

TEST(ResponseTest, MatchesOracleAndUniqueArgmaxUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> stored(n);
    std::iota(stored.begin(), stored.end(), 1);
    do {
      std::vector<int> input(n);
      std::iota(input.begin(), input.end(), 1);
      int maxima = 0;
      do {
        const Rational exact = ExactResponse(RankCode(input), RankCode(stored));
        ASSERT_EQ(exact, OracleResponse(input, stored));
        ASSERT_GT(exact, 0);
        ASSERT_LE(exact, 1);
        maxima += exact == 1;
        if (input == stored) {
          ASSERT_EQ(exact, 1);
        }
      } while (std::next_permutation(input.begin(), input.end()));
      ASSERT_EQ(maxima, 1);
    } while (n <= 4 && std::next_permutation(stored.begin(), stored.end()));
  }
}

TEST(ResponseTest, LengthMismatch) {
  try {
    Response(RankCode({1, 2}), RankCode({1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(SequenceTest, RejectsMixedKindsAndNan) {
  EXPECT_THROW(Sequence({Item(1), Item("a")}), Error);
  EXPECT_THROW(Sequence::FromNumbers({1.0, std::nan("")}), Error);
}

TEST(ItemTest, IntegralNumbersPrintWithoutFraction) {
  EXPECT_EQ(Item(18).ToString(), "18");
  EXPECT_EQ(Item(2.5).ToString(), "2.5");
  EXPECT_EQ(Item("bu").ToString(), "bu");
}

}  // namespace
}  // namespace ordinal
