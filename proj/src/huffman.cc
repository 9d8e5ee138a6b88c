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

#include "ordinal/huffman.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <tuple>

#include "ordinal/error.h"

namespace ordinal {

SymbolTable::SymbolTable(std::vector<std::pair<std::string, Rational>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::kEmptyAlphabet, "symbol table is empty");
  }
  std::set<std::string> seen;
  bool any_positive = false;
  for (const auto& [symbol, freq] : entries_) {
    if (!seen.insert(symbol).second) {
      throw Error(ErrorCode::kDuplicateItem, "duplicate symbol '" + symbol + "'");
    }
    if (freq < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative frequency for '" + symbol + "'");
    }
    if (freq > 0) any_positive = true;
  }
  if (!any_positive) {
    throw Error(ErrorCode::kDegenerateFrequencies, "all frequencies are zero");
  }
}

Rational SymbolTable::Total() const {
  Rational total = 0;
  for (const auto& entry : entries_) total += entry.second;
  return total;
}

namespace {

struct MergeNode {
  Rational weight;
  // Smallest contained real symbol id; dummies order after every real id,
  // among themselves by creation index.
  std::optional<std::string> min_symbol;
  int dummy_index = 0;
  int symbol = -1;  // leaf symbol index, -1 for internal or dummy
  bool dummy = false;
  std::vector<std::size_t> children;  // labelled #1..#k in this order
};

// Strict "comes first" order: lighter, then smaller symbol id.
bool Lighter(const MergeNode& a, const MergeNode& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.min_symbol.has_value() != b.min_symbol.has_value()) {
    return a.min_symbol.has_value();
  }
  if (a.min_symbol) return *a.min_symbol < *b.min_symbol;
  return a.dummy_index < b.dummy_index;
}

// Label order inside a merge: heavier first, ties by smaller symbol id.
bool RanksBefore(const MergeNode& a, const MergeNode& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.min_symbol.has_value() != b.min_symbol.has_value()) {
    return a.min_symbol.has_value();
  }
  if (a.min_symbol) return *a.min_symbol < *b.min_symbol;
  return a.dummy_index < b.dummy_index;
}

}  // namespace

OrdinalCodec OrdinalCodec::Build(const SymbolTable& table, int arity) {
  if (arity < 2) {
    throw Error(ErrorCode::kInvalidArgument, "arity must be at least 2");
  }
  const auto& entries = table.entries();
  std::map<std::string, OrdinalCodeword> codewords;
  if (entries.size() == 1) {
    codewords[entries.front().first] = {1};
    return FromCodewords(std::move(codewords), arity);
  }

  std::vector<MergeNode> nodes;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    nodes.push_back(MergeNode{entries[i].second, entries[i].first, 0,
                              static_cast<int>(i), false, {}});
  }
  const std::size_t k = static_cast<std::size_t>(arity);
  std::size_t dummies = 0;
  while ((entries.size() + dummies - 1) % (k - 1) != 0) ++dummies;
  for (std::size_t d = 0; d < dummies; ++d) {
    nodes.push_back(MergeNode{0, std::nullopt, static_cast<int>(d), -1, true, {}});
  }

  std::vector<std::size_t> queue(nodes.size());
  for (std::size_t i = 0; i < queue.size(); ++i) queue[i] = i;
  auto lighter = [&](std::size_t a, std::size_t b) {
    return Lighter(nodes[a], nodes[b]);
  };
  while (queue.size() > 1) {
    // Queues stay tiny (alphabet-sized), so a partial sort per merge is fine.
    std::partial_sort(queue.begin(), queue.begin() + k, queue.end(), lighter);
    std::vector<std::size_t> picked(queue.begin(), queue.begin() + k);
    queue.erase(queue.begin(), queue.begin() + k);
    std::sort(picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
      return RanksBefore(nodes[a], nodes[b]);
    });
    MergeNode merged{0, std::nullopt, 0, -1, false, picked};
    for (std::size_t child : picked) {
      merged.weight += nodes[child].weight;
      const auto& id = nodes[child].min_symbol;
      if (id && (!merged.min_symbol || *id < *merged.min_symbol)) {
        merged.min_symbol = id;
      }
    }
    nodes.push_back(std::move(merged));
    queue.push_back(nodes.size() - 1);
  }

  std::vector<std::pair<std::size_t, OrdinalCodeword>> stack{{queue.front(), {}}};
  while (!stack.empty()) {
    auto [at, path] = std::move(stack.back());
    stack.pop_back();
    const MergeNode& node = nodes[at];
    if (node.dummy) continue;
    if (node.children.empty()) {
      codewords[entries[node.symbol].first] = std::move(path);
      continue;
    }
    for (std::size_t r = 0; r < node.children.size(); ++r) {
      OrdinalCodeword next = path;
      next.push_back(static_cast<OrdinalLabel>(r + 1));
      stack.emplace_back(node.children[r], std::move(next));
    }
  }
  return FromCodewords(std::move(codewords), arity);
}

OrdinalCodec OrdinalCodec::FromCodewords(
    std::map<std::string, OrdinalCodeword> codewords, int arity) {
  if (arity < 2) {
    throw Error(ErrorCode::kInvalidArgument, "arity must be at least 2");
  }
  if (codewords.empty()) {
    throw Error(ErrorCode::kEmptyAlphabet, "codec has no symbols");
  }
  OrdinalCodec codec;
  codec.arity_ = arity;
  codec.codewords_ = std::move(codewords);
  codec.BuildTrie();
  return codec;
}

void OrdinalCodec::BuildTrie() {
  trie_.assign(1, TrieNode{std::vector<int>(arity_, -1), -1});
  symbols_.clear();
  for (const auto& [symbol, codeword] : codewords_) {
    if (codeword.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "empty codeword for '" + symbol + "'");
    }
    std::size_t at = 0;
    for (std::size_t i = 0; i < codeword.size(); ++i) {
      const OrdinalLabel label = codeword[i];
      if (label < 1 || label > arity_) {
        throw Error(ErrorCode::kInvalidArgument,
                    "label out of range in codeword for '" + symbol + "'");
      }
      if (trie_[at].symbol >= 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "codewords are not prefix-free at '" + symbol + "'");
      }
      int next = trie_[at].children[label - 1];
      if (next < 0) {
        next = static_cast<int>(trie_.size());
        trie_[at].children[label - 1] = next;
        trie_.push_back(TrieNode{std::vector<int>(arity_, -1), -1});
      }
      at = static_cast<std::size_t>(next);
    }
    const bool has_children =
        std::any_of(trie_[at].children.begin(), trie_[at].children.end(),
                    [](int c) { return c >= 0; });
    if (trie_[at].symbol >= 0 || has_children) {
      throw Error(ErrorCode::kInvalidArgument,
                  "codewords are not prefix-free at '" + symbol + "'");
    }
    trie_[at].symbol = static_cast<int>(symbols_.size());
    symbols_.push_back(symbol);
  }
}

const OrdinalCodeword& OrdinalCodec::Codeword(const std::string& symbol) const {
  const auto it = codewords_.find(symbol);
  if (it == codewords_.end()) {
    throw Error(ErrorCode::kUnknownSymbol, "unknown symbol '" + symbol + "'");
  }
  return it->second;
}

std::vector<OrdinalLabel> OrdinalCodec::Encode(
    const std::vector<std::string>& symbols) const {
  std::vector<OrdinalLabel> out;
  for (const std::string& symbol : symbols) {
    const auto& codeword = Codeword(symbol);
    out.insert(out.end(), codeword.begin(), codeword.end());
  }
  return out;
}

std::vector<std::string> OrdinalCodec::Decode(
    const std::vector<OrdinalLabel>& labels) const {
  std::vector<std::string> out;
  std::size_t at = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const OrdinalLabel label = labels[i];
    const int next = (label >= 1 && label <= arity_)
                         ? trie_[at].children[label - 1]
                         : -1;
    if (next < 0) {
      throw Error(ErrorCode::kTruncatedCode,
                  "label #" + std::to_string(label) + " at offset " +
                      std::to_string(i) + " leads nowhere");
    }
    at = static_cast<std::size_t>(next);
    if (trie_[at].symbol >= 0) {
      out.push_back(symbols_[trie_[at].symbol]);
      at = 0;
    }
  }
  if (at != 0) {
    throw Error(ErrorCode::kTruncatedCode, "label stream ends inside a codeword");
  }
  return out;
}

Rational OrdinalCodec::ExpectedLength(const SymbolTable& table) const {
  Rational weighted = 0;
  for (const auto& [symbol, freq] : table.entries()) {
    weighted += freq * static_cast<long long>(Codeword(symbol).size());
  }
  return weighted / table.Total();
}

Rational OrdinalCodec::KraftSum() const {
  using boost::multiprecision::cpp_int;
  Rational sum = 0;
  for (const auto& [symbol, codeword] : codewords_) {
    cpp_int den = 1;
    for (std::size_t i = 0; i < codeword.size(); ++i) den *= arity_;
    sum += Rational(cpp_int(1), den);
  }
  return sum;
}

std::string FormatCodeword(const OrdinalCodeword& codeword) {
  std::string out;
  for (OrdinalLabel label : codeword) out += "#" + std::to_string(label);
  return out;
}

double EntropyBits(const SymbolTable& table) {
  const double total = ToDouble(table.Total());
  double h = 0.0;
  for (const auto& entry : table.entries()) {
    const double p = ToDouble(entry.second) / total;
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace ordinal
