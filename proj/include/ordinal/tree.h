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

#ifndef ORDINAL_TREE_H_
#define ORDINAL_TREE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal/codes.h"
#include "ordinal/rational.h"
#include "ordinal/sequence.h"

namespace ordinal {

// Binary search tree produced by inserting a sequence's items one at a time
// in arrival order. Every node carries the midpoint of its search interval
// in (0,1) as a dyadic weight: the root is 1/2, and a child of a node at
// depth d with weight w sits at w -/+ 2^-(d+2).
class OrdinalTree {
 public:
  struct Node {
    Item item;
    std::size_t position;  // index of the item in the source sequence
    int depth;
    Rational weight;
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
  };

  // Stack-order insertion. Throws Error(kDuplicateItem) on repeated items,
  // Error(kEmptySequence), or Error(kUnsupported) above kMaxOrdinalLength.
  static OrdinalTree FromSequence(const Sequence& seq);

  // Nodes are stored in insertion order, so nodes()[i] holds seq[i] and
  // nodes()[0] is the root.
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  std::size_t size() const { return nodes_.size(); }
  int height() const;

  // Items in left-to-right (in-order) traversal.
  std::vector<Item> InOrder() const;

 private:
  OrdinalTree() = default;

  std::vector<Node> nodes_;
};

inline OrdinalTree StackOrderTree(const Sequence& seq) {
  return OrdinalTree::FromSequence(seq);
}

// Dyadic weight of the node holding each position of seq.
WeightVector TreeOrderWeights(const Sequence& seq);

// Balanced word over '(' and ')'.
class DyckWord {
 public:
  // Throws Error(kInvalidAlphabet) for other characters and
  // Error(kInvalidArgument) when the word is not balanced.
  explicit DyckWord(std::string symbols);

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string symbols_;
};

// True iff every prefix has at least as many '(' as ')' and the totals
// match. Throws Error(kInvalidAlphabet) on any other character.
bool DyckValidate(std::string_view word);

// serialize(node) = "(" + serialize(left) + ")" + serialize(right), with an
// empty subtree serialized as "". Bijective on tree shapes.
DyckWord TreeToDyck(const OrdinalTree& tree);

// Inverse of TreeToDyck on shapes. Items are the in-order ranks 1..N, so
// the result is also the stack-order tree of its preorder rank sequence.
// Throws Error(kEmptySequence) for the empty word.
OrdinalTree TreeFromDyck(const DyckWord& word);

// True iff one pass through a single stack sorts the permutation, i.e. it
// avoids the pattern 2-3-1.
bool IsStackSortable(const RankCode& rank);

// Values popped by the single-stack pass, in output order.
std::vector<int> StackSortOutput(const RankCode& rank);

}  // namespace ordinal

#endif  // ORDINAL_TREE_H_
