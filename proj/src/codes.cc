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
#include <numeric>

#include "ordinal/error.h"

namespace ordinal {
namespace {

void CheckLength(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptySequence, "length must be >= 1");
  if (n > kMaxOrdinalLength) {
    throw Error(ErrorCode::kUnsupported,
                "length " + std::to_string(n) + " exceeds the maximum of " +
                    std::to_string(kMaxOrdinalLength));
  }
}

// u(k) = 1/(N+1-k), the inverse-rank weight shared by the rank-order
// weights and the response kernel.
double InverseRankWeight(std::size_t n, int rank) {
  return 1.0 / static_cast<double>(n + 1 - static_cast<std::size_t>(rank));
}

}  // namespace

RankCode::RankCode(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  CheckLength(ranks_.size());
  std::vector<bool> seen(ranks_.size() + 1, false);
  for (int r : ranks_) {
    if (r < 1 || static_cast<std::size_t>(r) > ranks_.size() || seen[r]) {
      throw Error(ErrorCode::kInvalidRankCode,
                  "not a permutation of 1.." + std::to_string(ranks_.size()));
    }
    seen[r] = true;
  }
}

std::vector<std::size_t> RankCode::PositionsByRank() const {
  std::vector<std::size_t> positions(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    positions[ranks_[i] - 1] = i;
  }
  return positions;
}

std::string RankCode::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i > 0) out += ",";
    out += "#" + std::to_string(ranks_[i]);
  }
  return out + "]";
}

RankCode RankCodeOf(const Sequence& seq) {
  CheckLength(seq.size());
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return seq[a] < seq[b];
                   });
  std::vector<int> ranks(seq.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    ranks[order[k]] = static_cast<int>(k) + 1;
  }
  return RankCode(std::move(ranks));
}

std::string_view WeightKindName(WeightKind kind) {
  switch (kind) {
    case WeightKind::kTemporalStdp: return "temporal-stdp";
    case WeightKind::kRankOrder: return "rank-order";
    case WeightKind::kTreeOrder: return "tree-order";
  }
  return "unknown";
}

std::vector<double> WeightVector::ToDoubles() const {
  std::vector<double> out;
  out.reserve(weights.size());
  for (const Rational& w : weights) out.push_back(ToDouble(w));
  return out;
}

std::vector<std::string> WeightVector::Formatted() const {
  std::vector<std::string> out;
  out.reserve(weights.size());
  for (const Rational& w : weights) out.push_back(FormatRational(w));
  return out;
}

WeightVector StdpWeights(std::size_t n) {
  CheckLength(n);
  WeightVector out{{}, WeightKind::kTemporalStdp};
  out.weights.reserve(n);
  for (std::size_t t = 1; t <= n; ++t) {
    out.weights.push_back(
        MakeRational(1, static_cast<long long>(n + 1 - t)));
  }
  return out;
}

WeightVector RankOrderWeights(const RankCode& rank) {
  const std::size_t n = rank.size();
  WeightVector out{{}, WeightKind::kRankOrder};
  out.weights.reserve(n);
  for (int r : rank.ranks()) {
    out.weights.push_back(MakeRational(1, static_cast<long long>(n + 1 - r)));
  }
  return out;
}

double Response(const RankCode& input, const RankCode& stored) {
  const std::size_t n = input.size();
  if (stored.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "input length " + std::to_string(n) + " != stored length " +
                    std::to_string(stored.size()));
  }
  double dot = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = InverseRankWeight(n, stored[i]);
    dot += InverseRankWeight(n, input[i]) * u;
    // Summed in the same order as dot, so a matched input scores exactly 1.
    norm += u * u;
  }
  return dot / norm;
}

Rational ExactResponse(const RankCode& input, const RankCode& stored) {
  const std::size_t n = input.size();
  if (stored.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "input length " + std::to_string(n) + " != stored length " +
                    std::to_string(stored.size()));
  }
  const auto in = RankOrderWeights(input).weights;
  const auto st = RankOrderWeights(stored).weights;
  Rational dot = 0;
  Rational norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += in[i] * st[i];
    // Rank-order weights of any permutation cover every u(k) exactly once.
    norm += st[i] * st[i];
  }
  return dot / norm;
}

}  // namespace ordinal
