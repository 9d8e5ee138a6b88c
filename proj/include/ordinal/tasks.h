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

#ifndef ORDINAL_TASKS_H_
#define ORDINAL_TASKS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordinal/random.h"
#include "ordinal/sequence.h"

namespace ordinal {

// Canonical repetition pattern of a token sequence: the first distinct
// token becomes A, the second B, and so on ("totobu" -> AAB).
class StructureSignature {
 public:
  // Parses a pattern such as "AABB". Throws Error(kInvalidArgument) unless
  // it is nonempty, uses A-Z only and is in canonical first-occurrence form.
  explicit StructureSignature(std::string_view pattern);

  const std::string& str() const { return pattern_; }
  std::size_t size() const { return pattern_.size(); }

  friend bool operator==(const StructureSignature&,
                         const StructureSignature&) = default;
  friend auto operator<=>(const StructureSignature&,
                          const StructureSignature&) = default;

 private:
  std::string pattern_;
};

// Throws Error(kEmptySequence), or Error(kUnsupported) past 26 distinct
// tokens.
StructureSignature SignatureOf(const std::vector<std::string>& tokens);
StructureSignature SignatureOf(const Sequence& seq);

bool SameStructure(const std::vector<std::string>& a,
                   const std::vector<std::string>& b);

// Slot pattern with variables such as XYX. Distinct variables may bind the
// same token unless `distinct` is set; `fixed` pins slots to tokens.
struct Template {
  std::vector<std::string> slots;
  bool distinct = false;
  std::map<std::size_t, std::string> fixed;  // 0-based slot -> token

  // One variable per character: "XYX".
  static Template Parse(std::string_view pattern, bool distinct = false);

  // No repeated variable, no distinctness and no constraint: matches every
  // sequence of the right length.
  bool degenerate() const;
};

struct Violation {
  std::size_t position;  // 1-based
  std::string reason;
};

struct TemplateMatch {
  std::map<std::string, std::string> bindings;
  std::optional<Violation> violation;
  bool degenerate = false;  // warning only; the match is still evaluated

  bool ok() const { return !violation.has_value(); }
};

// Binds variables left to right and reports the first inconsistent slot.
// Throws Error(kLengthMismatch) when the lengths differ.
TemplateMatch MatchTemplate(const Template& tpl,
                            const std::vector<std::string>& tokens);

// Prediction for the slot right after a consistent prefix: the token its
// variable is already bound to, nullopt when the variable is still free
// (or the prefix is inconsistent). XY_ over [A, hide] predicts A.
// Throws Error(kLengthMismatch) when the prefix fills the template.
std::optional<std::string> CompleteTemplate(
    const Template& tpl, const std::vector<std::string>& prefix);

enum class Door { kA, kB };
enum class TaskStrategy {
  kRepeat,  // XXXXXX: keep the first door
  kSwitch,  // XYYYYY: switch once, then keep the other door
};

char DoorName(Door door);
std::string_view TaskStrategyName(TaskStrategy strategy);

// Harlow task-set agent holding the two strategies. It explores on trial 1
// and commits once, on the first reward outcome: a reward selects kRepeat,
// no reward selects kSwitch.
class TaskSetAgent {
 public:
  explicit TaskSetAgent(Door exploratory = Door::kA)
      : exploratory_(exploratory) {}
  static TaskSetAgent WithRandomExploration(Engine& engine);

  Door Choose() const;
  void Observe(bool rewarded);

  int trials_seen() const { return trials_seen_; }
  Door exploratory() const { return exploratory_; }
  std::optional<TaskStrategy> strategy() const { return strategy_; }

 private:
  Door exploratory_;
  int trials_seen_ = 0;
  std::optional<TaskStrategy> strategy_;
};

struct HarlowTrial {
  int episode;
  int trial;  // 1-based
  Door choice;
  bool reward;
};

// Runs one episode; reward_door[t] is the rewarded door on trial t+1.
// Throws Error(kPreconditionViolation) when the rewarded door changes
// within the episode, Error(kInvalidArgument) for an empty schedule.
std::vector<HarlowTrial> RunHarlowEpisode(TaskSetAgent agent,
                                          std::span<const Door> reward_door,
                                          int episode = 0);
std::vector<HarlowTrial> RunHarlowEpisode(TaskSetAgent agent, Door reward_door,
                                          int trials = 6, int episode = 0);

// "episode,trial,choice,reward" rows.
void WriteHarlowCsv(std::ostream& out, const std::vector<HarlowTrial>& log);

}  // namespace ordinal

#endif  // ORDINAL_TASKS_H_
