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

#include "polydyn/state.hpp"

#include <limits>
#include <stdexcept>

namespace polydyn {

std::string State::to_digits(std::uint32_t p) const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (p > 10) {
      if (i != 0) s += '.';
      s += std::to_string(coords_[i]);
    } else {
      s += static_cast<char>('0' + coords_[i]);
    }
  }
  return s;
}

State State::from_digits(std::string_view text, std::uint32_t p) {
  std::vector<std::uint32_t> coords;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("bad state '" + std::string(text) + "': " + why);
  };
  if (p > 10) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = std::min(text.find('.', start), text.size());
      const std::string_view part = text.substr(start, dot - start);
      if (part.empty()) throw bad("empty coordinate");
      std::uint64_t v = 0;
      for (char c : part) {
        if (c < '0' || c > '9') throw bad("not a number");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v >= p) throw bad("value out of range");
      }
      coords.push_back(static_cast<std::uint32_t>(v));
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw bad("not a digit");
      const auto v = static_cast<std::uint32_t>(c - '0');
      if (v >= p) throw bad("value out of range");
      coords.push_back(v);
    }
  }
  if (coords.empty()) throw bad("empty");
  return State(std::move(coords));
}

std::uint64_t state_count(std::uint32_t p, std::uint32_t n) {
  std::uint64_t c = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / p) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c *= p;
  }
  return c;
}

std::uint64_t state_index(const State& x, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * p + x[i];
  return idx;
}

State state_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> coords(n);
  for (std::uint32_t i = n; i-- > 0;) {
    coords[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return State(std::move(coords));
}

}  // namespace polydyn
