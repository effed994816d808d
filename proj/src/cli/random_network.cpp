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
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "polydyn/cli.hpp"

namespace polydyn::cli {

namespace {

std::string dnf(const std::vector<std::uint32_t>& regulators,
                const std::vector<bool>& table) {
  if (std::none_of(table.begin(), table.end(), [](bool b) { return b; })) return "0";
  if (std::all_of(table.begin(), table.end(), [](bool b) { return b; })) return "1";
  const std::size_t k = regulators.size();
  std::string out;
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (!table[row]) continue;
    if (!out.empty()) out += " | ";
    if (k > 1) out += '(';
    for (std::size_t j = 0; j < k; ++j) {
      if (j != 0) out += " & ";
      const bool on = (row >> (k - 1 - j)) & 1;
      out += (on ? "x" : "!x") + std::to_string(regulators[j] + 1);
    }
    if (k > 1) out += ')';
  }
  return out;
}

}  // namespace

std::vector<std::string> random_networks(const RandomNetworkOptions& options) {
  if (options.min_nodes == 0 || options.max_nodes < options.min_nodes) {
    throw std::invalid_argument("node range must satisfy 1 <= min <= max");
  }
  if (!(options.mean_indegree > 0)) {
    throw std::invalid_argument("mean in-degree must be positive");
  }
  std::mt19937_64 rng(options.seed);
  const auto whole = static_cast<std::uint32_t>(std::floor(options.mean_indegree));
  const double frac = options.mean_indegree - whole;

  std::vector<std::string> files;
  for (std::uint32_t net = 0; net < options.count; ++net) {
    const std::uint32_t n =
        std::uniform_int_distribution<std::uint32_t>(options.min_nodes, options.max_nodes)(rng);
    std::ostringstream rules;
    std::uint64_t total_indegree = 0;
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t k = whole + (std::bernoulli_distribution(frac)(rng) ? 1 : 0);
      k = std::clamp<std::uint32_t>(k, 1, n);
      total_indegree += k;
      for (std::uint32_t v = 0; v < n; ++v) pool[v] = v;
      for (std::uint32_t j = 0; j < k; ++j) {
        std::swap(pool[j], pool[std::uniform_int_distribution<std::uint32_t>(j, n - 1)(rng)]);
      }
      std::vector<std::uint32_t> regulators(pool.begin(), pool.begin() + k);
      std::sort(regulators.begin(), regulators.end());
      std::vector<bool> table(std::size_t{1} << k);
      for (std::size_t row = 0; row < table.size(); ++row) table[row] = (rng() & 1) != 0;

      rules << "# f" << i + 1 << " regulators:";
      for (std::uint32_t r : regulators) rules << " x" << r + 1;
      rules << '\n' << 'f' << i + 1 << " = " << dnf(regulators, table) << '\n';
    }
    std::ostringstream file;
    file << "# random Boolean network " << net + 1 << " of " << options.count << ", seed "
         << options.seed << '\n';
    file << "# nodes " << n << ", edges " << total_indegree << '\n';
    file << "KIND boolean\nSTATES 2\n" << rules.str();
    files.push_back(file.str());
  }
  return files;
}

}  // namespace polydyn::cli
