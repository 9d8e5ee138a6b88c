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

#ifndef ORDINAL_RANDOM_H_
#define ORDINAL_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace ordinal {

// std::mt19937_64 output is fixed by the standard, but the standard
// distributions are not. These helpers draw from the raw engine only so
// that seeded results are identical across standard libraries.
using Engine = std::mt19937_64;

// Uniform integer in [0, bound). bound must be positive.
std::uint64_t UniformIndex(Engine& engine, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(Engine& engine);

// Derives an independent per-module seed from the root seed.
std::uint64_t SplitSeed(std::uint64_t root, std::string_view stream);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace ordinal

#endif  // ORDINAL_RANDOM_H_
