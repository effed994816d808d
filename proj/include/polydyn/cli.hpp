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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polydyn/dynamics.hpp"

namespace polydyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceError = 3;

// Attractor report text: steady-state count and digit strings, then one
// "<m>-cycles: <count>" block per length 2..max_cycle_length (and any longer
// cycles simulation found).
std::string format_report(const AnalysisResult& result, std::uint32_t max_cycle_length);

// "100 -> 011 -> 010 -> 111 -> [cycle]" or "... -> [steady state]".
std::string format_trajectory(const Trajectory& t, std::uint32_t p);

std::string wiring_dot(const WiringDiagram& w, const CircuitReport* circuits = nullptr);
std::string phase_dot(const PhaseSpace& ps, bool label_probabilities);
std::string trajectory_dot(const Trajectory& t, std::uint32_t p);

struct RandomNetworkOptions {
  std::uint32_t min_nodes = 50;
  std::uint32_t max_nodes = 50;
  double mean_indegree = 1.68;
  std::uint32_t count = 1;
  std::uint64_t seed = 1;
};

// Boolean model files. Rule i picks floor(d) or floor(d)+1 regulators
// (at least 1, at most n) so the expected in-degree is d, and a uniformly
// random truth table over them. Equal options give byte-identical files.
std::vector<std::string> random_networks(const RandomNetworkOptions& options);

struct BenchRow {
  std::string model;
  std::uint32_t n = 0;
  double seconds = 0;
  std::optional<std::size_t> steady_states;  // empty when analysis failed
  std::string error;
};

// Times steady-state analysis of every regular file in dir (sorted by name)
// across the given number of worker threads.
std::vector<BenchRow> bench(const std::filesystem::path& dir, unsigned jobs);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Entry point of the polydyn tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polydyn::cli
