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

#include <string>

#include "polydyn/dynamics.hpp"
#include "polydyn/errors.hpp"

namespace polydyn {

namespace {

std::vector<State> probabilistic_fixed_points_by_enumeration(const ProbabilisticPDS& f,
                                                             std::uint64_t cap) {
  const std::uint32_t p = f.field.characteristic();
  const std::uint32_t n = f.size();
  const std::uint64_t count = state_count(p, n);
  if (count > cap) {
    throw ResourceError("simulation needs all " + std::to_string(p) + "^" +
                        std::to_string(n) + " states, above the enumeration cap of " +
                        std::to_string(cap) + "; use the algorithm mode instead");
  }
  std::vector<State> out;
  for (std::uint64_t s = 0; s < count; ++s) {
    const State x = state_from_index(s, p, n);
    bool fixed = true;
    for (std::uint32_t i = 0; i < n && fixed; ++i) {
      for (const Polynomial& g : f.choices[i]) {
        if (g.evaluate(x).value() != x[i]) {
          fixed = false;
          break;
        }
      }
    }
    if (fixed) out.push_back(x);
  }
  return out;
}

}  // namespace

AnalysisResult analyze(const ModelDocument& doc, const AnalyzeOptions& options) {
  TranslatedSystem translated = document_to_system(doc);
  AnalysisResult result{doc.kind, doc.states, doc.nvars, {}};
  const std::optional<UpdateSchedule> schedule =
      options.schedule ? options.schedule : translated.schedule;

  if (auto* prob = std::get_if<ProbabilisticPDS>(&translated.system)) {
    AttractorReport& report = result.report;
    if (options.mode == AnalysisMode::kAlgorithm) {
      report.method = AnalysisMethod::kAlgebraic;
      report.steady_states = steady_states_probabilistic(*prob);
    } else {
      report.method = AnalysisMethod::kEnumerative;
      report.steady_states =
          probabilistic_fixed_points_by_enumeration(*prob, options.enumeration_cap);
    }
    if (schedule && schedule->kind() == UpdateSchedule::Kind::kSequential) {
      report.diagnostics.push_back(
          "update schedule ignored: steady states of a probabilistic network do "
          "not depend on it");
    }
    if (options.max_cycle_length > 1) {
      report.diagnostics.push_back(
          "limit cycles are not computed for probabilistic networks");
    }
    return result;
  }

  PDS f = std::get<PDS>(std::move(translated.system));
  if (schedule) f = sequential_to_synchronous(f, *schedule);
  result.report = options.mode == AnalysisMode::kAlgorithm
                      ? attractors_algebraic(f, options.max_cycle_length,
                                             options.composition_cap)
                      : attractors_enumerative(f, options.enumeration_cap);
  return result;
}

}  // namespace polydyn
