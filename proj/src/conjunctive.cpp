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

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polydyn/dynamics.hpp"
#include "polydyn/errors.hpp"

namespace polydyn {

namespace {

// Variables of g if g is a product of distinct variables with coefficient 1.
std::optional<std::vector<std::uint32_t>> monomial_inputs(const Polynomial& g) {
  if (g.size() != 1) return std::nullopt;
  const auto& [m, c] = g.terms().front();
  if (c != 1 || m.degree() == 0) return std::nullopt;
  std::vector<std::uint32_t> vars;
  for (const auto& factor : m.factors()) vars.push_back(factor.var);
  return vars;
}

std::optional<std::vector<std::vector<std::uint32_t>>> all_inputs(const PDS& f) {
  std::vector<std::vector<std::uint32_t>> inputs;
  for (const Polynomial& g : f.functions()) {
    auto vars = monomial_inputs(g);
    if (!vars) return std::nullopt;
    inputs.push_back(std::move(*vars));
  }
  return inputs;
}

// x -> 1 + f(1 + x) turns an OR network into an AND network.
PDS complement_conjugate(const PDS& f) {
  const std::uint32_t n = f.size();
  const Polynomial one = Polynomial::constant(f.field(), n, 1);
  std::vector<Polynomial> flipped;
  for (std::uint32_t i = 0; i < n; ++i) {
    flipped.push_back(Polynomial::variable(f.field(), n, i) + one);
  }
  std::vector<Polynomial> out;
  for (const Polynomial& g : f.functions()) out.push_back(g.substitute(flipped) + one);
  return PDS(f.field(), std::move(out));
}

std::vector<std::uint32_t> bfs_levels(const std::vector<std::vector<std::uint32_t>>& adj) {
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> level(adj.size(), kUnseen);
  std::vector<std::uint32_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::uint32_t v : adj[u]) {
      if (level[v] == kUnseen) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return level;
}

int moebius(std::uint32_t k) {
  int mu = 1;
  for (std::uint32_t q = 2; q * q <= k; ++q) {
    if (k % q != 0) continue;
    k /= q;
    if (k % q == 0) return 0;
    mu = -mu;
  }
  return k > 1 ? -mu : mu;
}

}  // namespace

ConjunctiveSummary conjunctive_analysis(const PDS& f) {
  require_valid(f);
  if (f.field().characteristic() != 2) {
    throw UnsupportedError("conjunctive analysis needs a Boolean network (F_2)");
  }
  const std::uint32_t n = f.size();
  if (n == 0) throw UnsupportedError("network has no variables");

  ConjunctiveSummary out{};
  auto inputs = all_inputs(f);
  out.form = ConjunctiveSummary::Form::kConjunctive;
  if (!inputs) {
    inputs = all_inputs(complement_conjugate(f));
    out.form = ConjunctiveSummary::Form::kDisjunctive;
  }
  if (!inputs) {
    throw UnsupportedError(
        "network is neither conjunctive (every rule an AND of variables) nor "
        "disjunctive (every rule an OR of variables)");
  }

  std::vector<std::vector<std::uint32_t>> forward(n), backward(n);
  for (std::uint32_t target = 0; target < n; ++target) {
    for (std::uint32_t source : (*inputs)[target]) {
      forward[source].push_back(target);
      backward[target].push_back(source);
    }
  }
  const auto level = bfs_levels(forward);
  const auto reverse_level = bfs_levels(backward);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (level[v] == static_cast<std::uint32_t>(-1) ||
        reverse_level[v] == static_cast<std::uint32_t>(-1)) {
      throw UnsupportedError("wiring diagram is not strongly connected (x" +
                             std::to_string(v + 1) + " is not on a cycle through x1)");
    }
  }

  // In a strongly connected graph the gcd of cycle lengths equals the gcd of
  // level(u) + 1 - level(v) over all edges u -> v.
  std::uint32_t loop = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v : forward[u]) {
      const auto a = static_cast<std::int64_t>(level[u]) + 1;
      const auto b = static_cast<std::int64_t>(level[v]);
      loop = std::gcd(loop, static_cast<std::uint32_t>(a > b ? a - b : b - a));
    }
  }
  out.loop_number = loop;

  // Periodic states correspond to binary words of length L; orbits of exact
  // length d are the primitive necklaces of length d.
  for (std::uint32_t d = 1; d <= loop; ++d) {
    if (loop % d != 0) continue;
    BigCount total = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const int mu = moebius(d / e);
      if (mu == 0) continue;
      BigCount words = BigCount(1) << e;
      total += mu > 0 ? words : BigCount(-words);
    }
    total /= d;
    out.attractor_count += total;
    out.orbits_by_length.emplace_back(d, std::move(total));
  }
  return out;
}

}  // namespace polydyn
