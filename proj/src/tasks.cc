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

#include "ordinal/tasks.h"

#include <algorithm>

#include "ordinal/error.h"

namespace ordinal {

StructureSignature::StructureSignature(std::string_view pattern)
    : pattern_(pattern) {
  if (pattern_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty structure signature");
  }
  char next = 'A';
  for (char c : pattern_) {
    if (c < 'A' || c > 'Z' || c > next) {
      throw Error(ErrorCode::kInvalidArgument,
                  "signature '" + pattern_ + "' is not canonical");
    }
    if (c == next) ++next;
  }
}

namespace {

template <typename T>
StructureSignature Canonicalize(const std::vector<T>& tokens) {
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptySequence, "no tokens to classify");
  }
  std::vector<const T*> seen;
  std::string pattern;
  pattern.reserve(tokens.size());
  for (const T& token : tokens) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const T* s) { return *s == token; });
    std::size_t cls = static_cast<std::size_t>(it - seen.begin());
    if (it == seen.end()) {
      if (seen.size() == 26) {
        throw Error(ErrorCode::kUnsupported,
                    "more than 26 distinct tokens in one signature");
      }
      seen.push_back(&token);
    }
    pattern.push_back(static_cast<char>('A' + cls));
  }
  return StructureSignature(pattern);
}

}  // namespace

StructureSignature SignatureOf(const std::vector<std::string>& tokens) {
  return Canonicalize(tokens);
}

StructureSignature SignatureOf(const Sequence& seq) {
  return Canonicalize(seq.items());
}

bool SameStructure(const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return SignatureOf(a) == SignatureOf(b);
}

Template Template::Parse(std::string_view pattern, bool distinct) {
  Template tpl;
  for (char c : pattern) tpl.slots.emplace_back(1, c);
  tpl.distinct = distinct;
  return tpl;
}

bool Template::degenerate() const {
  if (distinct || !fixed.empty()) return false;
  std::vector<std::string> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Binds tokens[0..count) and returns the first violation, if any.
std::optional<Violation> Bind(const Template& tpl,
                              const std::vector<std::string>& tokens,
                              std::map<std::string, std::string>& bindings) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& var = tpl.slots[i];
    const std::string& token = tokens[i];
    if (auto fixed = tpl.fixed.find(i);
        fixed != tpl.fixed.end() && fixed->second != token) {
      return Violation{i + 1, "slot requires '" + fixed->second + "', got '" +
                                  token + "'"};
    }
    if (auto bound = bindings.find(var); bound != bindings.end()) {
      if (bound->second != token) {
        return Violation{i + 1, var + " is bound to '" + bound->second +
                                    "', got '" + token + "'"};
      }
      continue;
    }
    if (tpl.distinct) {
      for (const auto& [other, value] : bindings) {
        if (value == token) {
          return Violation{i + 1, var + " and " + other +
                                      " must bind distinct tokens"};
        }
      }
    }
    bindings.emplace(var, token);
  }
  return std::nullopt;
}

}  // namespace

TemplateMatch MatchTemplate(const Template& tpl,
                            const std::vector<std::string>& tokens) {
  if (tokens.size() != tpl.slots.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "template has " + std::to_string(tpl.slots.size()) +
                    " slots, sequence has " + std::to_string(tokens.size()));
  }
  TemplateMatch match;
  match.degenerate = tpl.degenerate();
  match.violation = Bind(tpl, tokens, match.bindings);
  if (match.violation) match.bindings.clear();
  return match;
}

std::optional<std::string> CompleteTemplate(
    const Template& tpl, const std::vector<std::string>& prefix) {
  if (prefix.size() >= tpl.slots.size()) {
    throw Error(ErrorCode::kLengthMismatch, "prefix leaves no slot to predict");
  }
  std::map<std::string, std::string> bindings;
  if (Bind(tpl, prefix, bindings)) return std::nullopt;
  const std::size_t slot = prefix.size();
  if (auto fixed = tpl.fixed.find(slot); fixed != tpl.fixed.end()) {
    return fixed->second;
  }
  if (auto bound = bindings.find(tpl.slots[slot]); bound != bindings.end()) {
    return bound->second;
  }
  return std::nullopt;
}

char DoorName(Door door) { return door == Door::kA ? 'A' : 'B'; }

std::string_view TaskStrategyName(TaskStrategy strategy) {
  return strategy == TaskStrategy::kRepeat ? "XXXXXX" : "XYYYYY";
}

TaskSetAgent TaskSetAgent::WithRandomExploration(Engine& engine) {
  return TaskSetAgent(UniformIndex(engine, 2) == 0 ? Door::kA : Door::kB);
}

Door TaskSetAgent::Choose() const {
  if (!strategy_ || *strategy_ == TaskStrategy::kRepeat) return exploratory_;
  return exploratory_ == Door::kA ? Door::kB : Door::kA;
}

void TaskSetAgent::Observe(bool rewarded) {
  if (trials_seen_++ == 0) {
    strategy_ = rewarded ? TaskStrategy::kRepeat : TaskStrategy::kSwitch;
  }
}

std::vector<HarlowTrial> RunHarlowEpisode(TaskSetAgent agent,
                                          std::span<const Door> reward_door,
                                          int episode) {
  if (reward_door.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "episode has no trials");
  }
  for (std::size_t t = 1; t < reward_door.size(); ++t) {
    if (reward_door[t] != reward_door[0]) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "rewarded door changes on trial " + std::to_string(t + 1));
    }
  }
  std::vector<HarlowTrial> log;
  log.reserve(reward_door.size());
  for (std::size_t t = 0; t < reward_door.size(); ++t) {
    const Door choice = agent.Choose();
    const bool reward = choice == reward_door[t];
    agent.Observe(reward);
    log.push_back({episode, static_cast<int>(t) + 1, choice, reward});
  }
  return log;
}

std::vector<HarlowTrial> RunHarlowEpisode(TaskSetAgent agent, Door reward_door,
                                          int trials, int episode) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const std::vector<Door> schedule(static_cast<std::size_t>(trials), reward_door);
  return RunHarlowEpisode(agent, schedule, episode);
}

void WriteHarlowCsv(std::ostream& out, const std::vector<HarlowTrial>& log) {
  out << "episode,trial,choice,reward\n";
  for (const auto& row : log) {
    out << row.episode << ',' << row.trial << ',' << DoorName(row.choice) << ','
        << (row.reward ? 1 : 0) << '\n';
  }
}

}  // namespace ordinal
