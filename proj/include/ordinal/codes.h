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

#ifndef ORDINAL_CODES_H_
#define ORDINAL_CODES_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ordinal/rational.h"
#include "ordinal/sequence.h"

namespace ordinal {

// Longest sequence any ordinal code accepts. Beyond it the dyadic tree
// weights and the integer kernels below stop being cheap to keep exact.
inline constexpr std::size_t kMaxOrdinalLength = 64;

// Permutation of 1..N giving the rank of each position.
class RankCode {
 public:
  // Throws Error(kInvalidRankCode) unless ranks is a permutation of 1..N,
  // Error(kEmptySequence) when empty, Error(kUnsupported) above
  // kMaxOrdinalLength.
  explicit RankCode(std::vector<int> ranks);
  RankCode(std::initializer_list<int> ranks)
      : RankCode(std::vector<int>(ranks)) {}

  std::size_t size() const { return ranks_.size(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }

  // Positions ordered by rank: result[k-1] is the position holding rank k.
  std::vector<std::size_t> PositionsByRank() const;

  std::string ToString() const;  // "[#5,#3,...]"

  friend bool operator==(const RankCode&, const RankCode&) = default;
  friend auto operator<=>(const RankCode&, const RankCode&) = default;

 private:
  std::vector<int> ranks_;
};

// Rank of every position with the stable tie rule: equal items are ranked
// by position, earlier first.
RankCode RankCodeOf(const Sequence& seq);

enum class WeightKind { kTemporalStdp, kRankOrder, kTreeOrder };

std::string_view WeightKindName(WeightKind kind);

// One neuron's synaptic weights, one exact rational per position.
struct WeightVector {
  std::vector<Rational> weights;
  WeightKind kind;

  std::vector<double> ToDoubles() const;
  std::vector<std::string> Formatted() const;  // "p/q" per weight
};

// Temporal STDP weights 1/(N+1-t) for positions t = 1..N: the latest item
// carries weight 1 and sensitivity decays towards the start.
WeightVector StdpWeights(std::size_t n);

// Rank-order weights 1/(N+1-rank[i]).
WeightVector RankOrderWeights(const RankCode& rank);

// Similarity of an input rank code to the code a neuron stores:
//
//   sum_i u(input[i]) u(stored[i]) / sum_k u(k)^2,   u(k) = 1/(N+1-k).
//
// u is strictly increasing, so by the rearrangement inequality the score
// is 1 exactly when input == stored and is below 1 for every other input.
// Throws Error(kLengthMismatch) when the lengths differ.
double Response(const RankCode& input, const RankCode& stored);

// Exact rational form of Response.
Rational ExactResponse(const RankCode& input, const RankCode& stored);

}  // namespace ordinal

#endif  // ORDINAL_CODES_H_
