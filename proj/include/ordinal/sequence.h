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

#ifndef ORDINAL_SEQUENCE_H_
#define ORDINAL_SEQUENCE_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ordinal {

// One element of a sequence: either a numeric value or an opaque token.
// Tokens are ordered by their symbol string.
class Item {
 public:
  Item(double value) : value_(value) {}  // NOLINT: implicit by design of literals
  Item(int value) : value_(static_cast<double>(value)) {}  // NOLINT
  Item(std::string token) : value_(std::move(token)) {}  // NOLINT
  Item(const char* token) : value_(std::string(token)) {}  // NOLINT

  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_token() const { return !is_number(); }
  double number() const { return std::get<double>(value_); }
  const std::string& token() const { return std::get<std::string>(value_); }

  std::string ToString() const;

  // Items of different kinds are never compared inside one Sequence; the
  // cross-kind order (numbers first) only makes this a total order.
  friend std::partial_ordering operator<=>(const Item& a, const Item& b);
  friend bool operator==(const Item& a, const Item& b) = default;

 private:
  std::variant<double, std::string> value_;
};

// Ordered, nonempty list of items of a single kind. `repertoire` optionally
// records the size M of the alphabet the tokens were drawn from.
class Sequence {
 public:
  // Throws Error(kEmptySequence) when items is empty and
  // Error(kInvalidArgument) when numbers and tokens are mixed or a number
  // is NaN.
  explicit Sequence(std::vector<Item> items,
                    std::optional<std::size_t> repertoire = std::nullopt);
  Sequence(std::initializer_list<Item> items)
      : Sequence(std::vector<Item>(items)) {}

  static Sequence FromNumbers(const std::vector<double>& values);
  static Sequence FromTokens(const std::vector<std::string>& tokens);

  std::size_t size() const { return items_.size(); }
  const Item& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Item>& items() const { return items_; }
  bool is_tokens() const { return items_.front().is_token(); }
  std::optional<std::size_t> repertoire() const { return repertoire_; }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Item> items_;
  std::optional<std::size_t> repertoire_;
};

}  // namespace ordinal

#endif  // ORDINAL_SEQUENCE_H_
