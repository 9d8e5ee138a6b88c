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

#ifndef ORDINAL_HUFFMAN_H_
#define ORDINAL_HUFFMAN_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordinal/rational.h"

namespace ordinal {

// Branch label: the rank (1 = heaviest) of the child taken at a node.
using OrdinalLabel = int;
using OrdinalCodeword = std::vector<OrdinalLabel>;

// Symbol frequencies. Symbol ids are ordered as strings, which fixes every
// Huffman tie-break independently of entry order.
class SymbolTable {
 public:
  // Throws Error(kEmptyAlphabet) when empty, Error(kDuplicateItem) on a
  // repeated symbol, Error(kInvalidArgument) on a negative frequency and
  // Error(kDegenerateFrequencies) when every frequency is zero.
  explicit SymbolTable(std::vector<std::pair<std::string, Rational>> entries);

  const std::vector<std::pair<std::string, Rational>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  Rational Total() const;

 private:
  std::vector<std::pair<std::string, Rational>> entries_;
};

// Prefix-free codec whose codewords are ordinal label strings. Decoding
// walks a trie built from the codewords.
class OrdinalCodec {
 public:
  // Huffman construction with arity k. The queue is padded with zero-weight
  // dummies so the final merge is full. Nodes leave the queue lightest
  // first, ties going to the smallest contained symbol id; the children of
  // each merge are then labelled #1..#k by descending weight, ties again by
  // smallest symbol id, so #1 is always the most probable branch. A
  // single-symbol table gets the one-branch codeword #1.
  //
  // Throws Error(kInvalidArgument) when arity < 2.
  static OrdinalCodec Build(const SymbolTable& table, int arity = 2);

  // Rebuilds a codec from persisted codewords. Throws
  // Error(kInvalidArgument) unless the codewords are nonempty, within
  // 1..arity and prefix-free.
  static OrdinalCodec FromCodewords(std::map<std::string, OrdinalCodeword> codewords,
                                    int arity);

  int arity() const { return arity_; }
  const std::map<std::string, OrdinalCodeword>& codewords() const {
    return codewords_;
  }
  // Throws Error(kUnknownSymbol).
  const OrdinalCodeword& Codeword(const std::string& symbol) const;

  // Concatenated codewords. Throws Error(kUnknownSymbol).
  std::vector<OrdinalLabel> Encode(const std::vector<std::string>& symbols) const;

  // Greedy trie walk. Throws Error(kTruncatedCode) on a label that leads
  // nowhere or a stream that ends inside a codeword.
  std::vector<std::string> Decode(const std::vector<OrdinalLabel>& labels) const;

  // Expected codeword length under the table's normalized frequencies.
  Rational ExpectedLength(const SymbolTable& table) const;

  // Sum over symbols of arity^-len: the Kraft sum.
  Rational KraftSum() const;

 private:
  struct TrieNode {
    std::vector<int> children;  // index by label-1, -1 when absent
    int symbol = -1;            // index into symbols_, -1 for internal nodes
  };

  OrdinalCodec() = default;
  void BuildTrie();

  int arity_ = 2;
  std::map<std::string, OrdinalCodeword> codewords_;
  std::vector<std::string> symbols_;
  std::vector<TrieNode> trie_;
};

// "#2#1"
std::string FormatCodeword(const OrdinalCodeword& codeword);

// Shannon entropy in bits of the normalized frequencies.
double EntropyBits(const SymbolTable& table);

}  // namespace ordinal

#endif  // ORDINAL_HUFFMAN_H_
