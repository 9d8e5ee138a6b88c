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

#include "ordinal/autoencoder.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ordinal/codes.h"
#include "ordinal/error.h"
#include "ordinal/random.h"
#include "ordinal/sequence.h"

namespace ordinal {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

double Norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Distinct values drawn from 0..999 in random order.
std::vector<double> RandomDistinct(Engine& engine, std::size_t n) {
  std::set<double> seen;
  std::vector<double> out;
  while (out.size() < n) {
    const double v = static_cast<double>(UniformIndex(engine, 1000));
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

TEST(YPopulationTest, DeterministicValidCodes) {
  const YPopulation a = YPopulation::Generate(7, 64, 6);
  const YPopulation b = YPopulation::Generate(7, 64, 6);
  const YPopulation c = YPopulation::Generate(8, 64, 6);
  EXPECT_EQ(a.codes(), b.codes());
  EXPECT_NE(a.codes(), c.codes());
  EXPECT_EQ(a.k(), 64u);
  EXPECT_EQ(a.n(), 6u);
  EXPECT_THROW(YPopulation::Generate(7, 0, 6), Error);
  EXPECT_THROW(YPopulation::Generate(7, 4, 0), Error);
}

TEST(EncodeTest, FactorsThroughRankCode) {
  const YPopulation pop = YPopulation::Generate(7, 256, 6);
  EXPECT_EQ(Encode(Sequence::FromNumbers({18, 13, 8, 14, 5, 19}), pop),
            Encode(Sequence::FromNumbers({180, 130, 80, 140, 50, 190}), pop));
}

TEST(EncodeTest, SingleMatchingNeuron) {
  const YPopulation pop = YPopulation::FromCodes({RankCode({2, 1, 3})});
  EXPECT_THAT(Encode(Sequence::FromNumbers({5, 1, 9}), pop), ElementsAre(1.0));
}

TEST(EncodeTest, TwoNeurons) {
  const YPopulation pop = YPopulation::FromCodes({RankCode({1, 2}), RankCode({2, 1})});
  const auto y = Encode(Sequence::FromNumbers({10, 20}), pop);
  const double norm = std::sqrt(1.0 + 0.64);
  EXPECT_THAT(y, ElementsAre(DoubleNear(1.0 / norm, 1e-15),
                             DoubleNear(0.8 / norm, 1e-15)));
}

TEST(EncodeTest, UnitNormAndLengthMismatch) {
  const YPopulation pop = YPopulation::Generate(3, 100, 5);
  Engine engine(1);
  for (int t = 0; t < 100; ++t) {
    EXPECT_NEAR(Norm(Encode(Sequence::FromNumbers(RandomDistinct(engine, 5)), pop)),
                1.0, 1e-12);
  }
  try {
    Encode(Sequence::FromNumbers({1, 2}), pop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(CodebookTest, ThetaMustBeOpenUnitInterval) {
  EXPECT_THROW(Codebook(1, 8, 3, 0.0), Error);
  EXPECT_THROW(Codebook(1, 8, 3, 1.0), Error);
  EXPECT_NO_THROW(Codebook(1, 8, 3, 0.5));
}

TEST(LearnTest, FirstIsNovelRepeatIsNot) {
  const Codebook empty(7, 256, 6);
  const YPopulation pop = empty.Population();
  const Sequence seq = Sequence::FromNumbers({18, 13, 8, 14, 5, 19});
  const LearnResult first = Learn(seq, pop, empty, "worked");
  EXPECT_TRUE(first.novel);
  EXPECT_EQ(first.book.entries().size(), 1u);
  EXPECT_EQ(first.book.Entry(first.z).label, "worked");
  const LearnResult second = Learn(seq, pop, first.book);
  EXPECT_FALSE(second.novel);
  EXPECT_EQ(second.z, first.z);
  EXPECT_EQ(second.book.entries().size(), 1u);
  EXPECT_TRUE(empty.empty());
}

TEST(LearnTest, HundredDistinctCodesGetHundredEntries) {
  const std::size_t n = 6;
  Codebook book(7, 256, n);
  const YPopulation pop = book.Population();
  Engine engine(SplitSeed(7, "test-sequences"));
  std::set<RankCode> codes;
  std::set<int> zs;
  while (codes.size() < 100) {
    const Sequence seq = Sequence::FromNumbers(RandomDistinct(engine, n));
    if (!codes.insert(RankCodeOf(seq)).second) continue;
    LearnResult r = Learn(seq, pop, book);
    ASSERT_TRUE(r.novel);
    zs.insert(r.z);
    book = std::move(r.book);
  }
  EXPECT_EQ(zs.size(), 100u);
}

TEST(LearnTest, LooseThresholdMergesNeighbouringCodes) {
  // Swapping the two lowest-weighted positions barely moves y; a 0.999
  // threshold cannot tell these two codes apart.
  const Codebook book(7, 256, 6, 0.999);
  const YPopulation pop = book.Population();
  const LearnResult a = Learn(Sequence::FromNumbers({3, 6, 4, 5, 1, 2}), pop, book);
  const LearnResult b = Learn(Sequence::FromNumbers({3, 6, 4, 5, 2, 1}), pop, a.book);
  EXPECT_FALSE(b.novel);
  EXPECT_EQ(b.z, a.z);

  const Codebook strict(7, 256, 6);
  const LearnResult c = Learn(Sequence::FromNumbers({3, 6, 4, 5, 1, 2}), pop, strict);
  EXPECT_TRUE(Learn(Sequence::FromNumbers({3, 6, 4, 5, 2, 1}), pop, c.book).novel);
}

TEST(RecognizeTest, OwnEntryAndRankPreservingVariants) {
  const Codebook empty(7, 256, 6);
  const YPopulation pop = empty.Population();
  const LearnResult r =
      Learn(Sequence::FromNumbers({18, 13, 8, 14, 5, 19}), pop, empty);
  const Recognition own =
      Recognize(Sequence::FromNumbers({18, 13, 8, 14, 5, 19}), pop, r.book);
  EXPECT_EQ(own.z, r.z);
  EXPECT_EQ(own.similarity, 1.0);
  const Recognition variant =
      Recognize(Sequence::FromNumbers({18.5, 13, 7, 14.2, 0, 100}), pop, r.book);
  EXPECT_EQ(variant.z, r.z);
  EXPECT_EQ(variant.similarity, 1.0);
}

TEST(RecognizeTest, EveryTranspositionLowersSimilarity) {
  const YPopulation pop = YPopulation::Generate(7, 256, 6);
  std::vector<int> perm = {1, 2, 3, 4, 5, 6};
  int checked = 0;
  do {
    const Sequence seq = Sequence::FromNumbers(std::vector<double>(perm.begin(), perm.end()));
    const LearnResult r = Learn(seq, pop, Codebook(7, 256, 6));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        std::vector<double> swapped(perm.begin(), perm.end());
        std::swap(swapped[i], swapped[j]);
        ASSERT_LT(Recognize(Sequence::FromNumbers(swapped), pop, r.book).similarity,
                  1.0);
      }
    }
    ++checked;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(checked, 720);
}

TEST(RecognizeTest, EmptyBook) {
  const Codebook book(7, 16, 3);
  try {
    Recognize(Sequence::FromNumbers({1, 2, 3}), book.Population(), book);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCodebook);
  }
}

TEST(DecodeTest, Examples) {
  Codebook book(7, 16, 6);
  const YPopulation pop = book.Population();
  const LearnResult ex =
      Learn(Sequence::FromNumbers({18, 13, 8, 14, 5, 19}), pop, book);
  EXPECT_EQ(Decode(ex.z, {5, 8, 13, 14, 18, 19}, ex.book),
            Sequence::FromNumbers({18, 13, 8, 14, 5, 19}));
  EXPECT_EQ(Decode(ex.z, {19, 5, 14, 13, 8, 18}, ex.book),
            Sequence::FromNumbers({18, 13, 8, 14, 5, 19}));

  const LearnResult id = Learn(Sequence::FromNumbers({1, 2, 3, 4, 5, 6}), pop, ex.book);
  EXPECT_EQ(Decode(id.z, {9, 2, 7, 1, 3, 4}, id.book),
            Sequence::FromNumbers({1, 2, 3, 4, 7, 9}));

  const Codebook pair_book(7, 4, 2);
  const LearnResult p = Learn(Sequence::FromNumbers({2, 1}), pair_book.Population(),
                              pair_book);
  EXPECT_EQ(Decode(p.z, {7, 3}, p.book), Sequence::FromNumbers({7, 3}));
}

TEST(DecodeTest, Errors) {
  const Codebook empty(7, 8, 3);
  const LearnResult r = Learn(Sequence::FromNumbers({1, 2, 3}), empty.Population(), empty);
  const auto code_of = [&](int z, std::vector<Item> bag) {
    try {
      Decode(z, bag, r.book);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code_of(r.z, {1, 2}), ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of(r.z, {1, 1, 2}), ErrorCode::kDuplicateItem);
  EXPECT_EQ(code_of(r.z + 5, {1, 2, 3}), ErrorCode::kUnknownZ);
}

TEST(DecodeTest, RoundTripRandomSequences) {
  Engine engine(404);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + UniformIndex(engine, 12);
    const Codebook empty(t, 8, n);
    const Sequence seq = Sequence::FromNumbers(RandomDistinct(engine, n));
    const LearnResult r = Learn(seq, empty.Population(), empty);
    std::vector<Item> bag = seq.items();
    std::sort(bag.begin(), bag.end());
    ASSERT_EQ(Decode(r.z, bag, r.book), seq);
  }
}

TEST(InferRankCodeTest, RecoversTheInputCode) {
  Engine engine(9);
  for (std::size_t n = 1; n <= 6; ++n) {
    const YPopulation pop = YPopulation::Generate(n, 128, n);
    for (int t = 0; t < 20; ++t) {
      const Sequence seq = Sequence::FromNumbers(RandomDistinct(engine, n));
      EXPECT_EQ(InferRankCode(Encode(seq, pop), pop), RankCodeOf(seq));
    }
  }
  const YPopulation big = YPopulation::Generate(1, 4, 9);
  EXPECT_THROW(InferRankCode(std::vector<double>(4, 0.5), big), Error);
}

TEST(UnitCosineTest, MatchesDotProduct) {
  const YPopulation pop = YPopulation::Generate(2, 32, 4);
  const auto a = Encode(Sequence::FromNumbers({1, 2, 3, 4}), pop);
  const auto b = Encode(Sequence::FromNumbers({4, 3, 2, 1}), pop);
  double dot = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  EXPECT_NEAR(UnitCosine(a, b), dot, 1e-12);
  EXPECT_EQ(UnitCosine(a, a), 1.0);
}

}  // namespace
}  // namespace ordinal
