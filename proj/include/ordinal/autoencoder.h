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

#ifndef ORDINAL_AUTOENCODER_H_
#define ORDINAL_AUTOENCODER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordinal/codes.h"
#include "ordinal/sequence.h"

namespace ordinal {

// Novelty threshold used when none is given. It must sit above the largest
// cosine between the encodings of two distinct rank codes so that every new
// structure recruits its own Z neuron; at N = 6 that cosine already exceeds
// 0.9999, and it creeps towards 1 as N grows.
inline constexpr double kDefaultNoveltyThreshold = 1.0 - 1e-10;

// Input gate: the current sequence together with its rank code.
struct InputGate {
  explicit InputGate(Sequence seq)
      : sequence(std::move(seq)), rank(RankCodeOf(sequence)) {}

  Sequence sequence;
  RankCode rank;
};

// Y population: K neurons, each tuned to one random lexicographic order
// (a uniformly drawn permutation of 1..N).
class YPopulation {
 public:
  // Throws Error(kInvalidArgument) when k == 0, Error(kEmptySequence) or
  // Error(kUnsupported) for n outside 1..kMaxOrdinalLength.
  static YPopulation Generate(std::uint64_t seed, std::size_t k, std::size_t n);
  // Explicit neuron codes, all of one length.
  static YPopulation FromCodes(std::vector<RankCode> codes);

  std::size_t k() const { return codes_.size(); }
  std::size_t n() const { return codes_.front().size(); }
  const std::vector<RankCode>& codes() const { return codes_; }

 private:
  explicit YPopulation(std::vector<RankCode> codes) : codes_(std::move(codes)) {}

  std::vector<RankCode> codes_;
};

// Unit-norm vector of Response(rank, neuron) over the population.
// Throws Error(kLengthMismatch).
std::vector<double> EncodeRank(const RankCode& rank, const YPopulation& y);
std::vector<double> Encode(const Sequence& seq, const YPopulation& y);

// Cosine similarity of two unit vectors, evaluated as 1 - |a - b|^2 / 2 so
// that identical encodings score exactly 1 and nearby ones keep their
// small distance instead of losing it to cancellation.
double UnitCosine(const std::vector<double>& a, const std::vector<double>& b);

struct CodebookEntry {
  int z = 0;
  std::vector<double> y;
  RankCode rank;
  std::optional<std::string> label;
};

// Z category neurons learnt by novelty-threshold recruitment. The book is
// a value: Learn returns a new book and leaves its argument untouched.
class Codebook {
 public:
  static constexpr int kVersion = 1;

  // Throws Error(kInvalidArgument) when theta is outside (0, 1).
  Codebook(std::uint64_t seed, std::size_t k, std::size_t n,
           double theta = kDefaultNoveltyThreshold);

  // Rebuilds a persisted book. Validates unit norms, unique z ids, entry
  // lengths and rank codes.
  static Codebook FromEntries(std::uint64_t seed, std::size_t k, std::size_t n,
                              double theta, std::vector<CodebookEntry> entries);

  std::uint64_t seed() const { return seed_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  double theta() const { return theta_; }
  const std::vector<CodebookEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Throws Error(kUnknownZ).
  const CodebookEntry& Entry(int z) const;

  // The Y population this book was built against.
  YPopulation Population() const { return YPopulation::Generate(seed_, k_, n_); }

  // Copy of this book with one more entry under the next free z id.
  Codebook WithEntry(std::vector<double> y, RankCode rank,
                     std::optional<std::string> label) const;

 private:
  void Validate(const CodebookEntry& entry) const;

  std::uint64_t seed_;
  std::size_t k_;
  std::size_t n_;
  double theta_;
  std::vector<CodebookEntry> entries_;
};

struct LearnResult {
  Codebook book;
  int z;
  bool novel;
};

struct Recognition {
  int z;
  double similarity;
};

// Recruits a new Z neuron when no entry reaches cosine theta with the
// encoding of seq; otherwise returns the best entry unchanged.
LearnResult Learn(const Sequence& seq, const YPopulation& y,
                  const Codebook& book,
                  std::optional<std::string> label = std::nullopt);

// Best entry by cosine, lowest z on ties. Throws Error(kEmptyCodebook).
Recognition Recognize(const Sequence& seq, const YPopulation& y,
                      const Codebook& book);

// Arranges the bag so its rank code equals the one stored under z: the
// k-th smallest item goes to the position of stored rank k, which drives
// the per-position prediction error 1 - Response to zero.
// Throws Error(kUnknownZ), Error(kLengthMismatch), Error(kDuplicateItem).
Sequence Decode(int z, const std::vector<Item>& bag, const Codebook& book);

// Diagnostic inverse problem: the rank code whose encoding is closest to y,
// found by exhaustive search. Throws Error(kUnsupported) for N > 8.
RankCode InferRankCode(const std::vector<double>& y, const YPopulation& pop);

}  // namespace ordinal

#endif  // ORDINAL_AUTOENCODER_H_
