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
#include <limits>
#include <numeric>
#include <set>

#include "ordinal/error.h"
#include "ordinal/random.h"

namespace ordinal {

YPopulation YPopulation::Generate(std::uint64_t seed, std::size_t k,
                                  std::size_t n) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (n == 0) throw Error(ErrorCode::kEmptySequence, "N must be >= 1");
  if (n > kMaxOrdinalLength) {
    throw Error(ErrorCode::kUnsupported, "N exceeds the maximum length");
  }
  Engine engine(SplitSeed(seed, "y-population"));
  std::vector<RankCode> codes;
  codes.reserve(k);
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t j = n; j > 1; --j) {
      std::swap(perm[j - 1], perm[UniformIndex(engine, j)]);
    }
    codes.emplace_back(perm);
  }
  return YPopulation(std::move(codes));
}

YPopulation YPopulation::FromCodes(std::vector<RankCode> codes) {
  if (codes.empty()) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  for (const RankCode& code : codes) {
    if (code.size() != codes.front().size()) {
      throw Error(ErrorCode::kLengthMismatch, "Y codes differ in length");
    }
  }
  return YPopulation(std::move(codes));
}

std::vector<double> EncodeRank(const RankCode& rank, const YPopulation& y) {
  if (rank.size() != y.n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sequence length " + std::to_string(rank.size()) +
                    " != population length " + std::to_string(y.n()));
  }
  std::vector<double> out;
  out.reserve(y.k());
  double norm = 0.0;
  for (const RankCode& neuron : y.codes()) {
    const double r = Response(rank, neuron);
    out.push_back(r);
    norm += r * r;
  }
  // Responses are sums of positive terms, so the norm is never zero.
  norm = std::sqrt(norm);
  for (double& v : out) v /= norm;
  return out;
}

std::vector<double> Encode(const Sequence& seq, const YPopulation& y) {
  if (seq.size() != y.n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sequence length " + std::to_string(seq.size()) +
                    " != population length " + std::to_string(y.n()));
  }
  return EncodeRank(RankCodeOf(seq), y);
}

double UnitCosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "vector lengths differ");
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq += d * d;
  }
  return 1.0 - 0.5 * sq;
}

Codebook::Codebook(std::uint64_t seed, std::size_t k, std::size_t n,
                   double theta)
    : seed_(seed), k_(k), n_(n), theta_(theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must lie in (0, 1)");
  }
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (n == 0 || n > kMaxOrdinalLength) {
    throw Error(ErrorCode::kInvalidArgument, "N outside the supported range");
  }
}

void Codebook::Validate(const CodebookEntry& entry) const {
  if (entry.y.size() != k_) {
    throw Error(ErrorCode::kLengthMismatch, "entry activity has wrong length");
  }
  if (entry.rank.size() != n_) {
    throw Error(ErrorCode::kLengthMismatch, "entry rank code has wrong length");
  }
  double norm = 0.0;
  for (double v : entry.y) norm += v * v;
  if (std::abs(std::sqrt(norm) - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "entry activity is not unit norm");
  }
}

Codebook Codebook::FromEntries(std::uint64_t seed, std::size_t k,
                               std::size_t n, double theta,
                               std::vector<CodebookEntry> entries) {
  Codebook book(seed, k, n, theta);
  std::set<int> ids;
  for (const auto& entry : entries) {
    book.Validate(entry);
    if (!ids.insert(entry.z).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate z id " + std::to_string(entry.z));
    }
  }
  book.entries_ = std::move(entries);
  return book;
}

Codebook Codebook::WithEntry(std::vector<double> y, RankCode rank,
                             std::optional<std::string> label) const {
  int next = 0;
  for (const auto& entry : entries_) next = std::max(next, entry.z + 1);
  CodebookEntry entry{next, std::move(y), std::move(rank), std::move(label)};
  Validate(entry);
  Codebook copy = *this;
  copy.entries_.push_back(std::move(entry));
  return copy;
}

const CodebookEntry& Codebook::Entry(int z) const {
  for (const auto& entry : entries_) {
    if (entry.z == z) return entry;
  }
  throw Error(ErrorCode::kUnknownZ, "no Z neuron with id " + std::to_string(z));
}

namespace {

// Best entry for an encoding; book must be nonempty.
Recognition BestMatch(const std::vector<double>& y, const Codebook& book) {
  Recognition best{0, -std::numeric_limits<double>::infinity()};
  bool first = true;
  for (const auto& entry : book.entries()) {
    const double sim = UnitCosine(y, entry.y);
    if (first || sim > best.similarity ||
        (sim == best.similarity && entry.z < best.z)) {
      best = {entry.z, sim};
      first = false;
    }
  }
  return best;
}

void CheckPopulation(const YPopulation& y, const Codebook& book) {
  if (y.k() != book.k() || y.n() != book.n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "population shape does not match the codebook");
  }
}

}  // namespace

LearnResult Learn(const Sequence& seq, const YPopulation& y,
                  const Codebook& book, std::optional<std::string> label) {
  CheckPopulation(y, book);
  const RankCode rank = RankCodeOf(seq);
  std::vector<double> activity = EncodeRank(rank, y);
  if (!book.empty()) {
    const Recognition best = BestMatch(activity, book);
    if (best.similarity >= book.theta()) return {book, best.z, false};
  }
  Codebook next = book.WithEntry(std::move(activity), rank, std::move(label));
  const int z = next.entries().back().z;
  return {std::move(next), z, true};
}

Recognition Recognize(const Sequence& seq, const YPopulation& y,
                      const Codebook& book) {
  if (book.empty()) throw Error(ErrorCode::kEmptyCodebook, "codebook is empty");
  CheckPopulation(y, book);
  return BestMatch(Encode(seq, y), book);
}

Sequence Decode(int z, const std::vector<Item>& bag, const Codebook& book) {
  const CodebookEntry& entry = book.Entry(z);
  if (bag.size() != entry.rank.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "bag holds " + std::to_string(bag.size()) + " items, code has " +
                    std::to_string(entry.rank.size()));
  }
  std::vector<Item> sorted = bag;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::kDuplicateItem,
                  "bag repeats item " + sorted[i].ToString());
    }
  }
  std::vector<Item> out(bag.size(), Item(0));
  for (std::size_t pos = 0; pos < bag.size(); ++pos) {
    out[pos] = sorted[entry.rank[pos] - 1];
  }
  return Sequence(std::move(out));
}

RankCode InferRankCode(const std::vector<double>& y, const YPopulation& pop) {
  const std::size_t n = pop.n();
  if (n > 8) {
    throw Error(ErrorCode::kUnsupported,
                "exhaustive rank inference is limited to N <= 8");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> best = perm;
  double best_sim = -std::numeric_limits<double>::infinity();
  do {
    const double sim = UnitCosine(y, EncodeRank(RankCode(perm), pop));
    if (sim > best_sim) {
      best_sim = sim;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return RankCode(std::move(best));
}

}  // namespace ordinal
