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
#include <functional>
#include <map>
#include <span>

#include "polydyn/polynomial.hpp"
#include "polydyn/state.hpp"

namespace polydyn {

inline constexpr std::uint64_t kDefaultInterpolationCap = std::uint64_t{1} << 24;

// The unique reduced polynomial agreeing with fn on all of F_p^n.
// Throws ResourceError when n * p^n exceeds cap.
Polynomial interpolate(
    PrimeField field, std::uint32_t n,
    const std::function<std::uint32_t(std::span<const std::uint32_t>)>& fn,
    std::uint64_t cap = kDefaultInterpolationCap);

// Table form; every point of F_p^n must have an entry (StructuralError
// otherwise).
Polynomial interpolate(const std::map<State, FieldElement>& table,
                       PrimeField field, std::uint32_t n,
                       std::uint64_t cap = kDefaultInterpolationCap);

}  // namespace polydyn
