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

#include "ordinal/io.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>

#include "ordinal/error.h"

namespace ordinal::io {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

// Runs f, turning nlohmann type/lookup errors into kParseError.
template <typename F>
auto Guard(const char* context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    Malformed(std::string(context) + ": " + e.what());
  }
}

const json& Field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    Malformed(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace

json ItemToJson(const Item& item) {
  if (item.is_token()) return item.token();
  const double v = item.number();
  if (std::trunc(v) == v && std::abs(v) < 9.0e15) {
    return static_cast<long long>(v);
  }
  return v;
}

Item ItemFromJson(const json& j) {
  if (j.is_string()) return Item(j.get<std::string>());
  if (j.is_number()) return Item(j.get<double>());
  Malformed("item must be a number or a string, got " + j.dump());
}

json SequenceToJson(const SequenceRecord& record) {
  json items = json::array();
  for (const Item& item : record.sequence.items()) {
    items.push_back(ItemToJson(item));
  }
  return json{{"id", record.id}, {"items", std::move(items)}};
}

SequenceRecord SequenceFromJson(const json& j) {
  const json& id = Field(j, "id");
  const json& items = Field(j, "items");
  if (!id.is_string()) Malformed("'id' must be a string");
  if (!items.is_array()) Malformed("'items' must be an array");
  std::vector<Item> parsed;
  parsed.reserve(items.size());
  for (const json& item : items) parsed.push_back(ItemFromJson(item));
  return {id.get<std::string>(), Sequence(std::move(parsed))};
}

std::vector<json> ReadJsonl(std::istream& in) {
  std::vector<json> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      Malformed("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<SequenceRecord> ReadSequences(std::istream& in) {
  std::vector<SequenceRecord> out;
  const auto lines = ReadJsonl(in);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(SequenceFromJson(lines[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "record " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

TokenRecord TokenRecordFromJson(const json& j) {
  return Guard("token record", [&] {
    TokenRecord record;
    record.tokens = Field(j, "tokens").get<std::vector<std::string>>();
    record.word = j.value("word", std::string());
    if (j.contains("label") && !j.at("label").is_null()) {
      record.label = j.at("label").get<std::string>();
    }
    return record;
  });
}

json TokenRecordToJson(const TokenRecord& record) {
  json j{{"word", record.word}, {"tokens", record.tokens}};
  if (record.label) j["label"] = *record.label;
  return j;
}

json TreeToJson(const OrdinalTree& tree) {
  const auto& nodes = tree.nodes();
  std::function<json(std::optional<std::size_t>)> emit =
      [&](std::optional<std::size_t> at) -> json {
    if (!at) return nullptr;
    const auto& node = nodes[*at];
    return json{{"item", ItemToJson(node.item)},
                {"weight", FormatRational(node.weight)},
                {"left", emit(node.left)},
                {"right", emit(node.right)}};
  };
  return emit(0);
}

json CodecToJson(const OrdinalCodec& codec) {
  json words = json::object();
  for (const auto& [symbol, codeword] : codec.codewords()) {
    words[symbol] = codeword;
  }
  return json{{"arity", codec.arity()}, {"codewords", std::move(words)}};
}

OrdinalCodec CodecFromJson(const json& j) {
  return Guard("codec", [&] {
    std::map<std::string, OrdinalCodeword> words;
    for (const auto& [symbol, codeword] : Field(j, "codewords").items()) {
      words[symbol] = codeword.get<OrdinalCodeword>();
    }
    return OrdinalCodec::FromCodewords(std::move(words),
                                       Field(j, "arity").get<int>());
  });
}

namespace {

Rational FrequencyFromJson(const json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) Malformed("frequency must be finite");
    return Rational(v);
  }
  Malformed("frequency must be a number or a \"p/q\" string");
}

}  // namespace

SymbolTable SymbolTableFromJson(const json& j) {
  std::vector<std::pair<std::string, Rational>> entries;
  if (j.is_object()) {
    for (const auto& [symbol, freq] : j.items()) {
      entries.emplace_back(symbol, FrequencyFromJson(freq));
    }
  } else if (j.is_array()) {
    for (const json& entry : j) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()) {
        Malformed("symbol table rows must be [symbol, frequency]");
      }
      entries.emplace_back(entry[0].get<std::string>(),
                           FrequencyFromJson(entry[1]));
    }
  } else {
    Malformed("symbol table must be an object or an array");
  }
  return SymbolTable(std::move(entries));
}

json MatrixToJson(const WeightMatrix& matrix) {
  return json{{"kernel", std::string(StdpKernelName(matrix.kernel()))},
              {"n", matrix.size()},
              {"units", matrix.units()},
              {"weights", matrix.weights()}};
}

WeightMatrix MatrixFromJson(const json& j) {
  return Guard("weight matrix", [&] {
    auto units = Field(j, "units").get<std::vector<std::string>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != units.size()) {
      Malformed("'n' does not match the unit count");
    }
    return WeightMatrix(std::move(units),
                        Field(j, "weights").get<std::vector<double>>(),
                        ParseStdpKernel(Field(j, "kernel").get<std::string>()));
  });
}

json CodebookToJson(const Codebook& book) {
  json entries = json::array();
  for (const auto& entry : book.entries()) {
    json e{{"z", entry.z}, {"y", entry.y}, {"rank", entry.rank.ranks()}};
    if (entry.label) e["label"] = *entry.label;
    entries.push_back(std::move(e));
  }
  return json{{"version", Codebook::kVersion},
              {"seed", book.seed()},
              {"K", book.k()},
              {"N", book.n()},
              {"theta", book.theta()},
              {"entries", std::move(entries)}};
}

Codebook CodebookFromJson(const json& j) {
  return Guard("codebook", [&] {
    const int version = Field(j, "version").get<int>();
    if (version != Codebook::kVersion) {
      Malformed("unsupported codebook version " + std::to_string(version));
    }
    std::vector<CodebookEntry> entries;
    for (const json& e : Field(j, "entries")) {
      CodebookEntry entry{Field(e, "z").get<int>(),
                          Field(e, "y").get<std::vector<double>>(),
                          RankCode(Field(e, "rank").get<std::vector<int>>()),
                          std::nullopt};
      if (e.contains("label") && !e.at("label").is_null()) {
        entry.label = e.at("label").get<std::string>();
      }
      entries.push_back(std::move(entry));
    }
    return Codebook::FromEntries(Field(j, "seed").get<std::uint64_t>(),
                                 Field(j, "K").get<std::size_t>(),
                                 Field(j, "N").get<std::size_t>(),
                                 Field(j, "theta").get<double>(),
                                 std::move(entries));
  });
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ReadJsonFile(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    Malformed(path.string() + ": " + e.what());
  }
}

void WriteFileAtomic(const std::filesystem::path& path,
                     const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::kIoError, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::kIoError,
                "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace ordinal::io
