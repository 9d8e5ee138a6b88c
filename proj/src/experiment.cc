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

#include "ordinal/experiment.h"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "ordinal/codes.h"
#include "ordinal/error.h"
#include "ordinal/random.h"

namespace ordinal {
namespace {

std::string FormatDouble(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto res = std::from_chars(value.data(), end, out);
  if (value.empty() || res.ec != std::errc() || res.ptr != end) {
    throw Error(ErrorCode::kParseError, "bad value for '" + std::string(key) +
                                            "': '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::string ExperimentConfig::Serialize() const {
  std::ostringstream os;
  os << "seed = " << seed << "\n"
     << "n = " << n << "\n"
     << "k = " << k << "\n"
     << "theta = " << FormatDouble(theta) << "\n"
     << "kernel = " << StdpKernelName(kernel) << "\n"
     << "epsilons = ";
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    os << (i ? "," : "") << FormatDouble(epsilons[i]);
  }
  os << "\n"
     << "harlow_trials = " << harlow_trials << "\n"
     << "harlow_episodes = " << harlow_episodes << "\n"
     << "noise_patterns = " << noise_patterns << "\n"
     << "huffman_streams = " << huffman_streams << "\n"
     << "huffman_tables = " << huffman_tables << "\n"
     << "autoencoder_sequences = " << autoencoder_sequences << "\n"
     << "in = " << in << "\n"
     << "out = " << out << "\n";
  return os.str();
}

void ExperimentConfig::Merge(std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key == "seed") {
      seed = ParseNumber<std::uint64_t>(key, value);
    } else if (key == "n") {
      n = ParseNumber<std::size_t>(key, value);
    } else if (key == "k") {
      k = ParseNumber<std::size_t>(key, value);
    } else if (key == "theta") {
      theta = ParseNumber<double>(key, value);
    } else if (key == "kernel") {
      try {
        kernel = ParseStdpKernel(value);
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, e.what());
      }
    } else if (key == "epsilons") {
      epsilons.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        epsilons.push_back(ParseNumber<double>(key, Trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (key == "harlow_trials") {
      harlow_trials = ParseNumber<int>(key, value);
    } else if (key == "harlow_episodes") {
      harlow_episodes = ParseNumber<int>(key, value);
    } else if (key == "noise_patterns") {
      noise_patterns = ParseNumber<int>(key, value);
    } else if (key == "huffman_streams") {
      huffman_streams = ParseNumber<int>(key, value);
    } else if (key == "huffman_tables") {
      huffman_tables = ParseNumber<int>(key, value);
    } else if (key == "autoencoder_sequences") {
      autoencoder_sequences = ParseNumber<int>(key, value);
    } else if (key == "in") {
      in = std::string(value);
    } else if (key == "out") {
      out = std::string(value);
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown config key '" + std::string(key) + "'");
    }
  }
}

ExperimentConfig ExperimentConfig::Parse(std::string_view text) {
  ExperimentConfig config;
  config.Merge(text);
  return config;
}

void ExperimentConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (n < 1 || n > kMaxOrdinalLength) fail("n must lie in 1..64");
  if (k < 1) fail("k must be >= 1");
  if (!(theta > 0.0 && theta < 1.0)) fail("theta must lie in (0, 1)");
  for (double e : epsilons) {
    if (!(e >= 0.0)) fail("epsilons must be >= 0");
  }
  if (harlow_trials < 1) fail("harlow_trials must be >= 1");
  if (harlow_episodes < 0 || noise_patterns < 0 || huffman_streams < 0 ||
      huffman_tables < 0 || autoencoder_sequences < 0) {
    fail("counts must be >= 0");
  }
}

std::string ExperimentConfig::Hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(Serialize())));
  return buf;
}

bool RunReport::passed() const {
  for (const auto& c : criteria) {
    if (!c.pass) return false;
  }
  return true;
}

std::string RunReport::Render(bool include_runtime) const {
  std::ostringstream os;
  os << "suite " << suite << " config " << config_hash << "\n";
  for (const auto& c : criteria) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " : " << c.detail;
    os << "\n";
  }
  for (const auto& m : metrics) {
    os << "metric " << m.name << " = " << FormatDouble(m.value) << "\n";
  }
  if (include_runtime) os << "runtime_s = " << FormatDouble(runtime_seconds) << "\n";
  os << "result " << suite << " " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ordinal
