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

#ifndef ORDINAL_STDP_H_
#define ORDINAL_STDP_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal/codes.h"

namespace ordinal {

// Magnitude of the weight between two units as a function of their rank
// distance d >= 1.
enum class StdpKernel {
  kConstant,         // 1
  kInverseDistance,  // 1/d
};

std::string_view StdpKernelName(StdpKernel kernel);  // "const" / "invdist"
// Accepts "const"/"constant" and "invdist"/"inverse-distance".
// Throws Error(kInvalidArgument).
StdpKernel ParseStdpKernel(std::string_view name);

// Antisymmetric unit-to-unit weights of the ordinal STDP network. A unit
// strengthens its link towards every unit of higher rank and weakens it
// towards every unit of lower rank: W[i][j] = sign(r_j - r_i) k(|r_j - r_i|).
class WeightMatrix {
 public:
  // Throws Error(kInvalidArgument) unless weights is size*size, the
  // matrix is antisymmetric with a zero diagonal and unit ids are unique.
  WeightMatrix(std::vector<std::string> units, std::vector<double> weights,
               StdpKernel kernel);

  std::size_t size() const { return units_.size(); }
  const std::vector<std::string>& units() const { return units_; }
  StdpKernel kernel() const { return kernel_; }
  // Row-major.
  const std::vector<double>& weights() const { return weights_; }
  double at(std::size_t pre, std::size_t post) const {
    return weights_[pre * units_.size() + post];
  }
  // Throws Error(kUnknownUnit).
  std::size_t IndexOf(std::string_view unit) const;

 private:
  std::vector<std::string> units_;
  std::vector<double> weights_;
  StdpKernel kernel_;
};

// Default unit ids "u1".."uN".
std::vector<std::string> DefaultUnitIds(std::size_t n);

// Stores one rank code. units defaults to DefaultUnitIds; otherwise it
// must hold one unique id per position (Error(kLengthMismatch)).
WeightMatrix StoreOrdinalPattern(const RankCode& rank, StdpKernel kernel,
                                 std::vector<std::string> units = {});

struct RecallResult {
  std::vector<std::string> order;  // active units, ascending by score
  std::vector<double> scores;      // scores[i] belongs to order[i]
};

// One-shot readout: score_i = sum over active j of W[j][i], the total
// input unit i receives from the cue. Units are ranked ascending by score;
// equal scores keep matrix order. For a noiseless matrix the score is
// strictly increasing in stored rank, so the recovered order is the stored
// order restricted to the cue.
//
// Throws Error(kEmptyCue) or Error(kUnknownUnit).
RecallResult Recall(const WeightMatrix& matrix,
                    const std::vector<std::string>& active);
RecallResult RecallAll(const WeightMatrix& matrix);

// Adds independent uniform noise in [-epsilon, epsilon] to each entry
// above the diagonal and mirrors it below. Deterministic in seed.
// Throws Error(kInvalidArgument) when epsilon < 0.
WeightMatrix Perturb(const WeightMatrix& matrix, double epsilon,
                     std::uint64_t seed);

// Appends units with all-zero weights. They receive score 0 and leave the
// scores of existing units untouched.
WeightMatrix InsertUnits(const WeightMatrix& matrix,
                         const std::vector<std::string>& extra);

// Largest noise amplitude that provably leaves Recall(matrix, active)
// unchanged: half the smallest gap between sorted scores, divided by the
// number of inputs each score sums (|active| - 1). Infinite for a single
// unit, zero when two scores already tie.
double NoiseMargin(const WeightMatrix& matrix,
                   const std::vector<std::string>& active);

}  // namespace ordinal

#endif  // ORDINAL_STDP_H_
