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

#include <algorithm>
#include <string>

#include "polydyn/errors.hpp"
#include "polydyn/translate.hpp"

namespace polydyn {

bool ExtensionReport::has_extension() const {
  return std::any_of(max_levels_.begin(), max_levels_.end(),
                     [&](std::uint32_t m) { return m + 1 < field_size_; });
}

bool ExtensionReport::is_extra(const State& x) const {
  for (std::size_t i = 0; i < x.size() && i < max_levels_.size(); ++i) {
    if (x[i] > max_levels_[i]) return true;
  }
  return false;
}

std::vector<State> ExtensionReport::extra_states(std::uint64_t cap) const {
  std::vector<State> out;
  if (!has_extension()) return out;
  const auto n = static_cast<std::uint32_t>(max_levels_.size());
  const std::uint64_t count = state_count(field_size_, n);
  if (count > cap) {
    throw ResourceError("listing extension states needs " +
                        std::to_string(field_size_) + "^" + std::to_string(n) +
                        " checks, cap is " + std::to_string(cap));
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    State x = state_from_index(idx, field_size_, n);
    if (is_extra(x)) out.push_back(std::move(x));
  }
  return out;
}

namespace {

void check_table(const LogicalModel& model, std::uint32_t i) {
  const std::string xi = "x" + std::to_string(i + 1);
  const LogicalTable& table = model.tables[i];
  std::vector<bool> seen(model.size(), false);
  std::uint64_t domain = 1;
  for (std::uint32_t r : table.regulators) {
    if (r >= model.size()) {
      throw StructuralError("table for " + xi + " names unknown regulator x" +
                            std::to_string(r + 1));
    }
    if (seen[r]) {
      throw StructuralError("table for " + xi + " lists x" +
                            std::to_string(r + 1) + " twice");
    }
    seen[r] = true;
    domain *= model.max_levels[r] + 1;
  }
  for (const auto& [inputs, target] : table.rows) {
    if (inputs.size() != table.regulators.size()) {
      throw StructuralError("table for " + xi + " has a row with " +
                            std::to_string(inputs.size()) + " inputs, expected " +
                            std::to_string(table.regulators.size()));
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const std::uint32_t r = table.regulators[k];
      if (inputs[k] > model.max_levels[r]) {
        throw StructuralError("table for " + xi + ": input " +
                              std::to_string(inputs[k]) + " exceeds MAX " +
                              std::to_string(model.max_levels[r]) + " of x" +
                              std::to_string(r + 1));
      }
    }
    if (target > model.max_levels[i]) {
      throw StructuralError("table for " + xi + ": target " +
                            std::to_string(target) + " exceeds MAX " +
                            std::to_string(model.max_levels[i]));
    }
  }
  if (table.rows.size() != domain) {
    throw StructuralError("incomplete table for " + xi + ": " +
                          std::to_string(table.rows.size()) + " of " +
                          std::to_string(domain) + " input combinations given");
  }
}

}  // namespace

LogicalTranslation logical_to_pds(const LogicalModel& model, std::uint64_t cap) {
  const std::uint32_t n = model.size();
  if (model.tables.size() != n) {
    throw StructuralError("logical model has " + std::to_string(n) +
                          " variables but " + std::to_string(model.tables.size()) +
                          " tables");
  }
  std::uint32_t top = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (model.max_levels[i] == 0) {
      throw StructuralError("x" + std::to_string(i + 1) + " has MAX 0");
    }
    top = std::max(top, model.max_levels[i]);
  }
  for (std::uint32_t i = 0; i < n; ++i) check_table(model, i);

  const PrimeField field(next_prime(top + 1));
  std::vector<Polynomial> functions;
  functions.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const LogicalTable& table = model.tables[i];
    const auto k = static_cast<std::uint32_t>(table.regulators.size());
    if (k == 0) {
      functions.push_back(Polynomial::constant(field, n, table.rows.begin()->second));
      continue;
    }
    std::vector<std::uint32_t> clamped(k);
    const Polynomial local = interpolate(
        field, k,
        [&](std::span<const std::uint32_t> y) {
          for (std::uint32_t j = 0; j < k; ++j) {
            clamped[j] = std::min(y[j], model.max_levels[table.regulators[j]]);
          }
          return table.rows.at(clamped);
        },
        cap);
    std::vector<Polynomial> embed;
    embed.reserve(k);
    for (std::uint32_t r : table.regulators) {
      embed.push_back(Polynomial::variable(field, n, r));
    }
    functions.push_back(local.substitute(embed));
  }
  return {PDS(field, std::move(functions)),
          ExtensionReport(field.characteristic(), model.max_levels)};
}

}  // namespace polydyn
