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

#include "ordinal/stdp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "ordinal/error.h"
#include "ordinal/random.h"

namespace ordinal {

std::string_view StdpKernelName(StdpKernel kernel) {
  return kernel == StdpKernel::kConstant ? "const" : "invdist";
}

StdpKernel ParseStdpKernel(std::string_view name) {
  if (name == "const" || name == "constant") return StdpKernel::kConstant;
  if (name == "invdist" || name == "inverse-distance") {
    return StdpKernel::kInverseDistance;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown kernel '" + std::string(name) + "'");
}

WeightMatrix::WeightMatrix(std::vector<std::string> units,
                           std::vector<double> weights, StdpKernel kernel)
    : units_(std::move(units)), weights_(std::move(weights)), kernel_(kernel) {
  const std::size_t n = units_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "matrix has no units");
  if (weights_.size() != n * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n * n) + " weights, got " +
                    std::to_string(weights_.size()));
  }
  if (std::set<std::string>(units_.begin(), units_.end()).size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "unit ids are not unique");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "nonzero diagonal");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != -at(j, i)) {
        throw Error(ErrorCode::kInvalidArgument, "matrix is not antisymmetric");
      }
    }
  }
}

std::size_t WeightMatrix::IndexOf(std::string_view unit) const {
  const auto it = std::find(units_.begin(), units_.end(), unit);
  if (it == units_.end()) {
    throw Error(ErrorCode::kUnknownUnit,
                "unknown unit '" + std::string(unit) + "'");
  }
  return static_cast<std::size_t>(it - units_.begin());
}

std::vector<std::string> DefaultUnitIds(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back("u" + std::to_string(i));
  return ids;
}

WeightMatrix StoreOrdinalPattern(const RankCode& rank, StdpKernel kernel,
                                 std::vector<std::string> units) {
  const std::size_t n = rank.size();
  if (units.empty()) units = DefaultUnitIds(n);
  if (units.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(units.size()) + " unit ids for " +
                    std::to_string(n) + " ranks");
  }
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int diff = rank[j] - rank[i];
      if (diff == 0) continue;
      const double magnitude = kernel == StdpKernel::kConstant
                                   ? 1.0
                                   : 1.0 / std::abs(diff);
      w[i * n + j] = diff > 0 ? magnitude : -magnitude;
    }
  }
  return WeightMatrix(std::move(units), std::move(w), kernel);
}

namespace {

std::vector<std::size_t> ResolveCue(const WeightMatrix& matrix,
                                    const std::vector<std::string>& active) {
  if (active.empty()) throw Error(ErrorCode::kEmptyCue, "empty cue");
  std::vector<std::size_t> idx;
  idx.reserve(active.size());
  for (const auto& unit : active) idx.push_back(matrix.IndexOf(unit));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

std::vector<double> CueScores(const WeightMatrix& matrix,
                              const std::vector<std::size_t>& cue) {
  std::vector<double> scores(cue.size(), 0.0);
  for (std::size_t a = 0; a < cue.size(); ++a) {
    for (std::size_t pre : cue) scores[a] += matrix.at(pre, cue[a]);
  }
  return scores;
}

}  // namespace

RecallResult Recall(const WeightMatrix& matrix,
                    const std::vector<std::string>& active) {
  const auto cue = ResolveCue(matrix, active);
  const auto scores = CueScores(matrix, cue);
  std::vector<std::size_t> order(cue.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] < scores[b];
                   });
  RecallResult result;
  for (std::size_t k : order) {
    result.order.push_back(matrix.units()[cue[k]]);
    result.scores.push_back(scores[k]);
  }
  return result;
}

RecallResult RecallAll(const WeightMatrix& matrix) {
  return Recall(matrix, matrix.units());
}

WeightMatrix Perturb(const WeightMatrix& matrix, double epsilon,
                     std::uint64_t seed) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be >= 0");
  }
  const std::size_t n = matrix.size();
  std::vector<double> w = matrix.weights();
  if (epsilon > 0.0) {
    Engine engine(seed);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double noise = epsilon * (2.0 * UniformUnit(engine) - 1.0);
        w[i * n + j] += noise;
        w[j * n + i] = -w[i * n + j];
      }
    }
  }
  return WeightMatrix(matrix.units(), std::move(w), matrix.kernel());
}

WeightMatrix InsertUnits(const WeightMatrix& matrix,
                         const std::vector<std::string>& extra) {
  const std::size_t n = matrix.size();
  const std::size_t m = n + extra.size();
  std::vector<std::string> units = matrix.units();
  units.insert(units.end(), extra.begin(), extra.end());
  std::vector<double> w(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i * m + j] = matrix.at(i, j);
  }
  return WeightMatrix(std::move(units), std::move(w), matrix.kernel());
}

double NoiseMargin(const WeightMatrix& matrix,
                   const std::vector<std::string>& active) {
  const auto cue = ResolveCue(matrix, active);
  if (cue.size() < 2) return std::numeric_limits<double>::infinity();
  auto scores = CueScores(matrix, cue);
  std::sort(scores.begin(), scores.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < scores.size(); ++i) {
    gap = std::min(gap, scores[i] - scores[i - 1]);
  }
  return gap / (2.0 * static_cast<double>(cue.size() - 1));
}

}  // namespace ordinal
