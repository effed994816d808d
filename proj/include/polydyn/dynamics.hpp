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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polydyn/model.hpp"
#include "polydyn/state.hpp"
#include "polydyn/translate.hpp"

namespace polydyn {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultEdgeEvaluationCap = std::uint64_t{1} << 20;
inline constexpr std::size_t kDefaultCircuitCap = 100'000;

enum class AnalysisMethod { kAlgebraic, kEnumerative };

// Steady states and limit cycles. Cycles start at their lexicographically
// smallest state and are sorted by (length, first state).
struct AttractorReport {
  std::vector<State> steady_states;
  std::vector<std::vector<State>> limit_cycles;
  AnalysisMethod method = AnalysisMethod::kAlgebraic;
  std::vector<std::string> diagnostics;
};

// Rotates a cycle so it starts at its smallest state.
std::vector<State> normalize_cycle(std::vector<State> cycle);

// Solutions of f(x) = x via a lex Groebner basis.
std::vector<State> steady_states(const PDS& f);

struct CycleSearch {
  std::vector<std::vector<State>> cycles;          // exact length m
  std::vector<std::vector<State>> shorter_orbits;  // length divides m, < m
};

// Solves f^m(x) = x and groups the solutions into orbits under f.
CycleSearch limit_cycles(const PDS& f, std::uint32_t m,
                         std::size_t composition_cap = kDefaultCompositionCap);

// States fixed by every candidate function of every coordinate.
std::vector<State> steady_states_probabilistic(const ProbabilisticPDS& f);

// Steady states plus cycles of every length 2..max_cycle_length.
AttractorReport attractors_algebraic(
    const PDS& f, std::uint32_t max_cycle_length,
    std::size_t composition_cap = kDefaultCompositionCap);

// Exhaustive forward-orbit exploration; ResourceError beyond cap states.
AttractorReport attractors_enumerative(const PDS& f,
                                       std::uint64_t cap = kDefaultEnumerationCap);

// x0, f(x0), ... with no repeats; f(states.back()) == states[cycle_start].
struct Trajectory {
  std::vector<State> states;
  std::size_t cycle_start = 0;

  std::size_t cycle_length() const { return states.size() - cycle_start; }
  bool reaches_steady_state() const { return cycle_length() == 1; }
};

Trajectory trajectory(const PDS& f, const State& x0);

struct PhaseEdge {
  std::uint64_t from;
  std::uint64_t to;
  Rational probability;

  friend bool operator==(const PhaseEdge&, const PhaseEdge&) = default;
};

// All p^n states, indexed as in state_index(); edges sorted by (from, to).
// Deterministic systems have exactly one edge of probability 1 per state.
struct PhaseSpace {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  std::vector<PhaseEdge> edges;

  std::uint64_t node_count() const { return state_count(p, n); }
  State state(std::uint64_t index) const { return state_from_index(index, p, n); }
};

PhaseSpace phase_space(const PDS& f, std::uint64_t cap = kDefaultEnumerationCap);
// Edges to the same target are merged, so probabilities out of each state
// sum to 1.
PhaseSpace phase_space(const ProbabilisticPDS& f,
                       std::uint64_t cap = kDefaultEnumerationCap);

enum class EdgeSign { kPositive, kNegative, kAmbivalent, kUnsigned };

std::string_view to_string(EdgeSign sign);

struct WiringEdge {
  std::uint32_t source;  // x_source influences f_target
  std::uint32_t target;
  EdgeSign sign;
  bool verified;  // false when the evaluation cap forced a syntactic edge

  friend bool operator==(const WiringEdge&, const WiringEdge&) = default;
};

struct WiringDiagram {
  std::uint32_t n = 0;
  std::vector<WiringEdge> edges;  // sorted by (source, target)

  bool fully_verified() const;
  std::optional<WiringEdge> edge(std::uint32_t source, std::uint32_t target) const;
};

// Functional dependency graph. Over F_2 every edge also carries its sign.
WiringDiagram wiring_diagram(const PDS& f,
                             std::uint64_t evaluation_cap = kDefaultEdgeEvaluationCap);

struct Circuit {
  std::vector<std::uint32_t> nodes;  // starts at its smallest node
  EdgeSign sign;
};

struct CircuitReport {
  std::vector<Circuit> circuits;
  bool complete = true;  // false if the cap cut the enumeration short
};

// Elementary circuits of the wiring diagram of a Boolean system.
// UnsupportedError for p != 2.
CircuitReport functional_circuits(
    const PDS& f, std::size_t circuit_cap = kDefaultCircuitCap,
    std::uint64_t evaluation_cap = kDefaultEdgeEvaluationCap);

// Every elementary cycle of a directed graph given as adjacency lists.
// Stops after cap cycles and reports whether enumeration finished.
std::pair<std::vector<std::vector<std::uint32_t>>, bool> elementary_cycles(
    const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t cap);

using BigCount = boost::multiprecision::cpp_int;

struct ConjunctiveSummary {
  enum class Form { kConjunctive, kDisjunctive };
  Form form;
  // gcd of the cycle lengths of the strongly connected wiring diagram.
  std::uint32_t loop_number;
  // (d, number of periodic orbits of exact length d) for every d | loop_number.
  std::vector<std::pair<std::uint32_t, BigCount>> orbits_by_length;
  BigCount attractor_count;
};

// Closed-form attractor structure of a conjunctive or disjunctive Boolean
// network with a strongly connected wiring diagram. UnsupportedError with an
// explanation otherwise.
ConjunctiveSummary conjunctive_analysis(const PDS& f);

enum class AnalysisMode { kAlgorithm, kSimulation };

struct AnalyzeOptions {
  AnalysisMode mode = AnalysisMode::kAlgorithm;
  std::uint32_t max_cycle_length = 1;
  std::optional<UpdateSchedule> schedule;  // overrides the document's
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t composition_cap = kDefaultCompositionCap;
};

struct AnalysisResult {
  ModelKind kind;
  std::uint32_t p;
  std::uint32_t n;
  AttractorReport report;
};

// Translates the document, applies the schedule, and runs the requested
// attractor analysis. For logical models every state in the image of f is
// in range, so attractors never contain extension states.
AnalysisResult analyze(const ModelDocument& doc, const AnalyzeOptions& options);

}  // namespace polydyn
