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

#ifndef ORDINAL_VERIFY_H_
#define ORDINAL_VERIFY_H_

#include <string>
#include <string_view>
#include <vector>

#include "ordinal/experiment.h"

namespace ordinal {

// Names accepted by RunSuite, in canonical order.
const std::vector<std::string>& SuiteNames();

// Runs one named verification suite. Throws Error(kUnknownSuite).
//
//   fig3f        exact weight vectors of the worked example
//   argmax       unique maximum of the response kernel, N <= 7
//   catalan      Dyck words per shape, stack-sortability vs 231 search
//   stdp-recall  ordinal STDP recall under deletion, insertion and noise
//   roundtrip    autoencoder learn / decode / recognize
//   huffman      ordinal Huffman roundtrip, Kraft sum, entropy bounds
//   tasks        structure signatures, XYX templates, Harlow agent
RunReport RunSuite(std::string_view name, const ExperimentConfig& config);

// Runs several suites on up to `jobs` threads. Reports come back in the
// order of `names` whatever the scheduling.
std::vector<RunReport> RunSuites(const std::vector<std::string>& names,
                                 const ExperimentConfig& config, int jobs = 1);

}  // namespace ordinal

#endif  // ORDINAL_VERIFY_H_
