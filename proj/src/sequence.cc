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

#include "ordinal/sequence.h"

#include <charconv>
#include <cmath>

#include "ordinal/error.h"

namespace ordinal {

std::string Item::ToString() const {
  if (is_token()) return token();
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), number());
  return std::string(buf, res.ptr);
}

std::partial_ordering operator<=>(const Item& a, const Item& b) {
  if (a.is_number() != b.is_number()) {
    return a.is_number() ? std::partial_ordering::less
                         : std::partial_ordering::greater;
  }
  if (a.is_number()) return a.number() <=> b.number();
  return a.token() <=> b.token();
}

Sequence::Sequence(std::vector<Item> items,
                   std::optional<std::size_t> repertoire)
    : items_(std::move(items)), repertoire_(repertoire) {
  if (items_.empty()) {
    throw Error(ErrorCode::kEmptySequence, "sequence has no items");
  }
  const bool tokens = items_.front().is_token();
  for (const Item& item : items_) {
    if (item.is_token() != tokens) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sequence mixes numbers and tokens");
    }
    if (item.is_number() && std::isnan(item.number())) {
      throw Error(ErrorCode::kInvalidArgument, "sequence contains NaN");
    }
  }
}

Sequence Sequence::FromNumbers(const std::vector<double>& values) {
  return Sequence(std::vector<Item>(values.begin(), values.end()));
}

Sequence Sequence::FromTokens(const std::vector<std::string>& tokens) {
  return Sequence(std::vector<Item>(tokens.begin(), tokens.end()));
}

}  // namespace ordinal
