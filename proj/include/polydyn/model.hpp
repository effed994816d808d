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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "polydyn/polynomial.hpp"
#include "polydyn/state.hpp"

namespace polydyn {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kDefaultCompositionCap = 1'000'000;

// f = (f1, ..., fn) : F_p^n -> F_p^n. Construction does not check shape;
// validate() reports problems and every operation rejects an invalid system.
class PDS {
 public:
  PDS(PrimeField field, std::vector<Polynomial> functions)
      : field_(field), functions_(std::move(functions)) {}

  static PDS identity(PrimeField field, std::uint32_t n);

  const PrimeField& field() const { return field_; }
  std::uint32_t size() const {
    return static_cast<std::uint32_t>(functions_.size());
  }
  std::span<const Polynomial> functions() const { return functions_; }
  const Polynomial& operator[](std::size_t i) const { return functions_[i]; }

  friend bool operator==(const PDS&, const PDS&) = default;

 private:
  PrimeField field_;
  std::vector<Polynomial> functions_;
};

// Per coordinate, a list of candidate update polynomials and the exact
// probability of each.
struct ProbabilisticPDS {
  PrimeField field;
  std::vector<std::vector<Polynomial>> choices;
  std::vector<std::vector<Rational>> probabilities;

  // Uniform distribution over each coordinate's candidates.
  static ProbabilisticPDS uniform(PrimeField field,
                                  std::vector<std::vector<Polynomial>> choices);

  std::uint32_t size() const { return static_cast<std::uint32_t>(choices.size()); }
  // Number of deterministic systems obtained by fixing one candidate per
  // coordinate (saturates at UINT64_MAX).
  std::uint64_t selection_count() const;
  // pick[i] indexes choices[i].
  PDS selection(std::span<const std::uint32_t> pick) const;
};

class UpdateSchedule {
 public:
  enum class Kind { kSynchronous, kSequential };

  static UpdateSchedule synchronous() { return UpdateSchedule(Kind::kSynchronous, {}); }
  // 0-based coordinate order. Checked when applied, not here.
  static UpdateSchedule sequential(std::vector<std::uint32_t> order) {
    return UpdateSchedule(Kind::kSequential, std::move(order));
  }

  Kind kind() const { return kind_; }
  std::span<const std::uint32_t> order() const { return order_; }

  friend bool operator==(const UpdateSchedule&, const UpdateSchedule&) = default;

 private:
  UpdateSchedule(Kind kind, std::vector<std::uint32_t> order)
      : kind_(kind), order_(std::move(order)) {}

  Kind kind_;
  std::vector<std::uint32_t> order_;
};

// Human readable violations; empty when well formed.
std::vector<std::string> validate(const PDS& f);
std::vector<std::string> validate(const ProbabilisticPDS& f);
// Throws StructuralError listing the violations, if any.
void require_valid(const PDS& f);
void require_valid(const ProbabilisticPDS& f);

State step(const PDS& f, const State& x);

// The synchronous system equivalent to updating coordinates one at a time in
// schedule order. Throws StructuralError for an order that is not a
// permutation of the coordinates.
PDS sequential_to_synchronous(const PDS& f, const UpdateSchedule& schedule);

// f composed with itself m times. Throws ResourceError if a coordinate grows
// beyond max_terms.
PDS iterate(const PDS& f, std::uint32_t m,
            std::size_t max_terms = kDefaultCompositionCap);

}  // namespace polydyn
