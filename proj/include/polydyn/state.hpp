// Copyright 2026 The polydyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polydyn {

// A point of F_p^n. Coordinates are residues; the owning field is implied by
// the system the state is used with.
class State {
 public:
  State() = default;
  explicit State(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}
  State(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::uint32_t> coords() const { return coords_; }
  operator std::span<const std::uint32_t>() const { return coords_; }

  // "011" style. Fields with p > 10 separate coordinates by '.'.
  std::string to_digits(std::uint32_t p) const;
  // Inverse of to_digits; throws std::invalid_argument on malformed text or
  // values >= p.
  static State from_digits(std::string_view text, std::uint32_t p);

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

// Mixed-radix indexing of F_p^n with x1 most significant, so index order is
// lexicographic state order.
std::uint64_t state_count(std::uint32_t p, std::uint32_t n);  // saturates
std::uint64_t state_index(const State& x, std::uint32_t p);
State state_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t n);

}  // namespace polydyn
