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

#include "ordinal/tree.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ordinal/codes.h"
#include "ordinal/error.h"
#include "ordinal/rational.h"
#include "ordinal/sequence.h"

namespace ordinal {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

// Pointer-based BST used as an independent serialization oracle.
struct OracleNode {
  int value;
  std::unique_ptr<OracleNode> left, right;
};

void OracleInsert(std::unique_ptr<OracleNode>& slot, int value) {
  if (!slot) {
    slot = std::make_unique<OracleNode>(OracleNode{value, nullptr, nullptr});
  } else {
    OracleInsert(value < slot->value ? slot->left : slot->right, value);
  }
}

std::string OracleDyck(const std::unique_ptr<OracleNode>& node) {
  if (!node) return "";
  return "(" + OracleDyck(node->left) + ")" + OracleDyck(node->right);
}

std::string OracleDyckOf(const std::vector<int>& seq) {
  std::unique_ptr<OracleNode> root;
  for (int v : seq) OracleInsert(root, v);
  return OracleDyck(root);
}

bool Contains231(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (p[k] < p[i] && p[i] < p[j]) return true;
  return false;
}

std::vector<long long> CatalanNumbers(int up_to) {
  std::vector<long long> c(up_to + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= up_to; ++n)
    for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  return c;
}

Sequence Seq(const std::vector<int>& v) {
  return Sequence::FromNumbers(std::vector<double>(v.begin(), v.end()));
}

std::string W(const Rational& r) { return FormatRational(r); }

TEST(OrdinalTreeTest, WorkedExampleShape) {
  const OrdinalTree tree = StackOrderTree(Seq({18, 13, 8, 14, 5, 19}));
  const auto& n = tree.nodes();
  ASSERT_EQ(n.size(), 6u);
  EXPECT_EQ(tree.root().item, Item(18));
  EXPECT_EQ(n[*n[0].left].item, Item(13));
  EXPECT_EQ(n[*n[0].right].item, Item(19));
  EXPECT_EQ(n[*n[1].left].item, Item(8));
  EXPECT_EQ(n[*n[1].right].item, Item(14));
  EXPECT_EQ(n[*n[2].left].item, Item(5));
  EXPECT_EQ(tree.height(), 3);
}

TEST(OrdinalTreeTest, WorkedExampleWeights) {
  const OrdinalTree tree = StackOrderTree(Seq({18, 13, 8, 14, 5, 19}));
  std::vector<std::string> got;
  for (const auto& node : tree.nodes()) got.push_back(W(node.weight));
  EXPECT_THAT(got, ElementsAre("1/2", "1/4", "1/8", "3/8", "1/16", "3/4"));
  EXPECT_THAT(TreeOrderWeights(Seq({18, 13, 8, 14, 5, 19})).Formatted(),
              UnorderedElementsAre("1/2", "1/4", "1/8", "1/16", "3/8", "3/4"));
  EXPECT_EQ(TreeOrderWeights(Seq({7})).kind, WeightKind::kTreeOrder);
}

TEST(OrdinalTreeTest, Singleton) {
  const OrdinalTree tree = StackOrderTree(Seq({7}));
  EXPECT_EQ(tree.size(), 1u);
  EXPECT_EQ(W(tree.root().weight), "1/2");
  EXPECT_THAT(TreeOrderWeights(Seq({7})).Formatted(), ElementsAre("1/2"));
  EXPECT_EQ(TreeToDyck(tree).str(), "()");
}

TEST(OrdinalTreeTest, DecreasingChainIsLeftSpine) {
  const OrdinalTree tree = StackOrderTree(Seq({5, 4, 3, 2}));
  EXPECT_EQ(tree.height(), 3);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    EXPECT_EQ(tree.nodes()[i].depth, static_cast<int>(i));
    EXPECT_FALSE(tree.nodes()[i].right.has_value());
  }
}

TEST(OrdinalTreeTest, Errors) {
  try {
    StackOrderTree(Seq({3, 1, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateItem);
  }
  std::vector<int> big(kMaxOrdinalLength + 1);
  std::iota(big.begin(), big.end(), 1);
  try {
    StackOrderTree(Seq(big));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(OrdinalTreeTest, InvariantsOverAllInsertionOrders) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const OrdinalTree tree = StackOrderTree(Seq(perm));
      const auto& nodes = tree.nodes();
      // In-order traversal is sorted.
      std::vector<Item> sorted(perm.begin(), perm.end());
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(tree.InOrder(), sorted);
      // Dyadic rule and distinct weights.
      std::set<Rational> weights;
      ASSERT_EQ(nodes[0].depth, 0);
      ASSERT_EQ(nodes[0].weight, MakeRational(1, 2));
      for (const auto& node : nodes) {
        ASSERT_GT(node.weight, 0);
        ASSERT_LT(node.weight, 1);
        weights.insert(node.weight);
        const Rational step = MakeRational(1, 1LL << (node.depth + 2));
        if (node.left) {
          ASSERT_EQ(nodes[*node.left].weight, node.weight - step);
          ASSERT_EQ(nodes[*node.left].depth, node.depth + 1);
          ASSERT_LT(nodes[*node.left].item, node.item);
        }
        if (node.right) {
          ASSERT_EQ(nodes[*node.right].weight, node.weight + step);
          ASSERT_GT(nodes[*node.right].item, node.item);
        }
      }
      ASSERT_EQ(weights.size(), nodes.size());
      // Weight order agrees with value order.
      for (const auto& a : nodes)
        for (const auto& b : nodes)
          ASSERT_EQ(a.weight < b.weight, a.item < b.item);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(DyckTest, Examples) {
  EXPECT_EQ(TreeToDyck(StackOrderTree(Seq({18, 13, 19}))).str(), "(())()");
  EXPECT_EQ(TreeToDyck(StackOrderTree(Seq({18, 13, 8, 14, 5, 19}))).str(),
            "(((()))())()");
  EXPECT_EQ(OracleDyckOf({18, 13, 8, 14, 5, 19}), "(((()))())()");
}

TEST(DyckTest, Validate) {
  EXPECT_TRUE(DyckValidate("(())()"));
  EXPECT_TRUE(DyckValidate(""));
  EXPECT_FALSE(DyckValidate(")("));
  EXPECT_FALSE(DyckValidate("(()"));
  try {
    DyckValidate("(a)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidAlphabet);
  }
  EXPECT_THROW(DyckWord("(()"), Error);
}

TEST(DyckTest, DistinctWordsAreCatalanAndMatchOracle) {
  const auto catalan = CatalanNumbers(8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> words;
    do {
      const DyckWord word = TreeToDyck(StackOrderTree(Seq(perm)));
      ASSERT_EQ(word.size(), 2u * n);
      ASSERT_TRUE(DyckValidate(word.str()));
      if (n <= 6) {
        ASSERT_EQ(word.str(), OracleDyckOf(perm));
      }
      words.insert(word.str());
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(static_cast<long long>(words.size()), catalan[n]) << "n=" << n;
  }
}

TEST(DyckTest, TreeFromDyckRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const DyckWord word = TreeToDyck(StackOrderTree(Seq(perm)));
      const OrdinalTree rebuilt = TreeFromDyck(word);
      ASSERT_EQ(rebuilt.size(), static_cast<std::size_t>(n));
      ASSERT_EQ(TreeToDyck(rebuilt), word);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(StackSortTest, Examples) {
  EXPECT_TRUE(IsStackSortable(RankCode({1, 2, 3})));
  EXPECT_FALSE(IsStackSortable(RankCode({2, 3, 1})));
  EXPECT_THAT(StackSortOutput(RankCode({3, 1, 2})), ElementsAre(1, 2, 3));
}

TEST(StackSortTest, AgreesWith231SearchAndCountsCatalan) {
  const auto catalan = CatalanNumbers(8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long long sortable = 0;
    do {
      const bool s = IsStackSortable(RankCode(perm));
      ASSERT_EQ(s, !Contains231(perm));
      sortable += s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(sortable, catalan[n]);
  }
}

TEST(StackSortTest, FourHasFourteen) {
  std::vector<int> perm = {1, 2, 3, 4};
  int count = 0;
  do count += IsStackSortable(RankCode(perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(count, 14);
}

}  // namespace
}  // namespace ordinal
