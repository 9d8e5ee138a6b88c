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
#include <functional>

#include "ordinal/error.h"

namespace ordinal {

OrdinalTree OrdinalTree::FromSequence(const Sequence& seq) {
  if (seq.size() > kMaxOrdinalLength) {
    throw Error(ErrorCode::kUnsupported,
                "length " + std::to_string(seq.size()) +
                    " exceeds the maximum of " +
                    std::to_string(kMaxOrdinalLength));
  }
  OrdinalTree tree;
  tree.nodes_.reserve(seq.size());
  tree.nodes_.push_back(Node{seq[0], 0, 0, MakeRational(1, 2), {}, {}});
  for (std::size_t pos = 1; pos < seq.size(); ++pos) {
    const Item& item = seq[pos];
    std::size_t at = 0;
    while (true) {
      Node& node = tree.nodes_[at];
      if (item == node.item) {
        throw Error(ErrorCode::kDuplicateItem,
                    "duplicate item " + item.ToString() + " at position " +
                        std::to_string(pos));
      }
      const bool go_left = item < node.item;
      std::optional<std::size_t>& child = go_left ? node.left : node.right;
      if (child) {
        at = *child;
        continue;
      }
      const int depth = node.depth + 1;
      // Offset 2^-(d+2) for a parent at depth d = depth - 1.
      Rational offset(boost::multiprecision::cpp_int(1),
                      boost::multiprecision::cpp_int(1) << (depth + 1));
      Rational weight = go_left ? node.weight - offset : node.weight + offset;
      child = tree.nodes_.size();
      // `node` may dangle after the push_back below.
      tree.nodes_.push_back(Node{item, pos, depth, std::move(weight), {}, {}});
      break;
    }
  }
  return tree;
}

int OrdinalTree::height() const {
  int h = 0;
  for (const Node& node : nodes_) h = std::max(h, node.depth);
  return h;
}

std::vector<Item> OrdinalTree::InOrder() const {
  std::vector<Item> out;
  out.reserve(nodes_.size());
  std::vector<std::size_t> stack;
  std::optional<std::size_t> at = 0;
  while (at || !stack.empty()) {
    while (at) {
      stack.push_back(*at);
      at = nodes_[*at].left;
    }
    const std::size_t top = stack.back();
    stack.pop_back();
    out.push_back(nodes_[top].item);
    at = nodes_[top].right;
  }
  return out;
}

WeightVector TreeOrderWeights(const Sequence& seq) {
  const OrdinalTree tree = OrdinalTree::FromSequence(seq);
  WeightVector out{{}, WeightKind::kTreeOrder};
  out.weights.resize(seq.size());
  for (const auto& node : tree.nodes()) out.weights[node.position] = node.weight;
  return out;
}

DyckWord::DyckWord(std::string symbols) : symbols_(std::move(symbols)) {
  if (!DyckValidate(symbols_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "unbalanced parentheses: '" + symbols_ + "'");
  }
}

bool DyckValidate(std::string_view word) {
  long depth = 0;
  bool balanced = true;
  for (char c : word) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) balanced = false;
    } else {
      throw Error(ErrorCode::kInvalidAlphabet,
                  std::string("character '") + c + "' is not a parenthesis");
    }
  }
  return balanced && depth == 0;
}

DyckWord TreeToDyck(const OrdinalTree& tree) {
  std::string out;
  out.reserve(2 * tree.size());
  const auto& nodes = tree.nodes();
  std::function<void(std::optional<std::size_t>)> emit =
      [&](std::optional<std::size_t> at) {
        while (at) {
          out.push_back('(');
          emit(nodes[*at].left);
          out.push_back(')');
          at = nodes[*at].right;
        }
      };
  emit(0);
  return DyckWord(std::move(out));
}

OrdinalTree TreeFromDyck(const DyckWord& word) {
  const std::string& w = word.str();
  if (w.empty()) throw Error(ErrorCode::kEmptySequence, "empty Dyck word");
  // Parse "(" L ")" R into preorder node ids and in-order ranks, then
  // replay the preorder ranks through stack-order insertion.
  std::size_t cursor = 0;
  int next_rank = 0;
  std::vector<int> preorder_slot;   // preorder index -> in-order rank
  std::function<void()> parse = [&]() {
    while (cursor < w.size() && w[cursor] == '(') {
      ++cursor;
      const std::size_t slot = preorder_slot.size();
      preorder_slot.push_back(0);
      parse();
      ++cursor;  // matching ')'
      preorder_slot[slot] = ++next_rank;
    }
  };
  parse();
  std::vector<Item> items;
  items.reserve(preorder_slot.size());
  for (int r : preorder_slot) items.emplace_back(r);
  return OrdinalTree::FromSequence(Sequence(std::move(items)));
}

std::vector<int> StackSortOutput(const RankCode& rank) {
  std::vector<int> out;
  out.reserve(rank.size());
  std::vector<int> stack;
  for (int x : rank.ranks()) {
    while (!stack.empty() && stack.back() < x) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return out;
}

bool IsStackSortable(const RankCode& rank) {
  const auto out = StackSortOutput(rank);
  return std::is_sorted(out.begin(), out.end());
}

}  // namespace ordinal
