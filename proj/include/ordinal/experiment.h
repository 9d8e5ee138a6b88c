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

#ifndef ORDINAL_EXPERIMENT_H_
#define ORDINAL_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal/stdp.h"

namespace ordinal {

// Every knob of an experiment run. Persisted as flat "key = value" lines;
// command-line flags override file values.
struct ExperimentConfig {
  std::uint64_t seed = 7;
  std::size_t n = 6;
  std::size_t k = 256;
  double theta = 1.0 - 1e-10;
  StdpKernel kernel = StdpKernel::kConstant;
  std::vector<double> epsilons = {0.0, 0.01, 0.1};
  int harlow_trials = 6;
  int harlow_episodes = 4;
  int noise_patterns = 1000;
  int huffman_streams = 10000;
  int huffman_tables = 1000;
  int autoencoder_sequences = 100;
  std::string in;
  std::string out;

  // Canonical text form, one key per line in a fixed order.
  std::string Serialize() const;
  // Applies "key = value" lines onto *this. Blank lines and '#' comments
  // are skipped. Throws Error(kParseError) on unknown keys or bad values
  // and Error(kInvalidArgument) when a value breaks a module precondition.
  void Merge(std::string_view text);
  static ExperimentConfig Parse(std::string_view text);
  void Validate() const;

  // 16 hex digits of FNV-1a over Serialize().
  std::string Hash() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;  // measured values
};

struct Metric {
  std::string name;
  double value = 0.0;
};

struct RunReport {
  std::string suite;
  std::string config_hash;
  std::vector<Criterion> criteria;
  std::vector<Metric> metrics;
  double runtime_seconds = 0.0;

  bool passed() const;
  // Runtime is left out unless asked for, so reports of identical runs are
  // byte-identical.
  std::string Render(bool include_runtime = false) const;
};

}  // namespace ordinal

#endif  // ORDINAL_EXPERIMENT_H_
