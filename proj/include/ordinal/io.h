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

#ifndef ORDINAL_IO_H_
#define ORDINAL_IO_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordinal/autoencoder.h"
#include "ordinal/huffman.h"
#include "ordinal/sequence.h"
#include "ordinal/stdp.h"
#include "ordinal/tree.h"

namespace ordinal::io {

using nlohmann::json;

// Integral numbers are written as JSON integers so [18,13] survives a
// round trip unchanged.
json ItemToJson(const Item& item);
// Throws Error(kParseError) for anything but a number or a string.
Item ItemFromJson(const json& j);

// {"id": string, "items": [number|string, ...]}
struct SequenceRecord {
  std::string id;
  Sequence sequence;
};

json SequenceToJson(const SequenceRecord& record);
// Throws Error(kParseError) on malformed records; module errors
// (EmptySequence, mixed kinds) propagate as-is.
SequenceRecord SequenceFromJson(const json& j);

// One JSON value per nonblank line. Errors carry the 1-based line number.
std::vector<json> ReadJsonl(std::istream& in);
std::vector<SequenceRecord> ReadSequences(std::istream& in);

// {"word": "totobu", "tokens": ["to","to","bu"], "label": "AAB"}
struct TokenRecord {
  std::string word;
  std::vector<std::string> tokens;
  std::optional<std::string> label;
};
TokenRecord TokenRecordFromJson(const json& j);
json TokenRecordToJson(const TokenRecord& record);

// {"item": ..., "weight": "p/q", "left": {...}|null, "right": {...}|null}
json TreeToJson(const OrdinalTree& tree);

// {"arity": k, "codewords": {"a": [1], "b": [2, 1]}}
json CodecToJson(const OrdinalCodec& codec);
OrdinalCodec CodecFromJson(const json& j);

// {"a": "1/2", "b": 0.25} or [["a", "1/2"], ...]; numbers convert exactly.
SymbolTable SymbolTableFromJson(const json& j);

// {"kernel": "const", "n": N, "units": [...], "weights": [row-major]}
json MatrixToJson(const WeightMatrix& matrix);
WeightMatrix MatrixFromJson(const json& j);

// {"version": 1, "seed": s, "K": k, "N": n, "theta": t, "entries": [...]}
json CodebookToJson(const Codebook& book);
Codebook CodebookFromJson(const json& j);

json ReadJsonFile(const std::filesystem::path& path);
std::string ReadTextFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over path, so a failed
// run never leaves a partial file behind. Throws Error(kIoError).
void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents);

}  // namespace ordinal::io

#endif  // ORDINAL_IO_H_
