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
#include <tuple>

#include "polydyn/dynamics.hpp"
#include "polydyn/errors.hpp"

namespace polydyn {

std::string_view to_string(EdgeSign sign) {
  switch (sign) {
    case EdgeSign::kPositive:
      return "positive";
    case EdgeSign::kNegative:
      return "negative";
    case EdgeSign::kAmbivalent:
      return "ambivalent";
    case EdgeSign::kUnsigned:
      return "unsigned";
  }
  return "unsigned";
}

bool WiringDiagram::fully_verified() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const WiringEdge& e) { return e.verified; });
}

std::optional<WiringEdge> WiringDiagram::edge(std::uint32_t source,
                                              std::uint32_t target) const {
  const auto it = std::lower_bound(
      edges.begin(), edges.end(), std::pair{source, target},
      [](const WiringEdge& e, const std::pair<std::uint32_t, std::uint32_t>& key) {
        return std::pair{e.source, e.target} < key;
      });
  if (it == edges.end() || it->source != source || it->target != target) {
    return std::nullopt;
  }
  return *it;
}

namespace {

struct EdgeCheck {
  bool functional = false;
  bool seen_up = false;    // value rises somewhere as x_source rises
  bool seen_down = false;  // value falls somewhere
};

// Walks the regulator subspace of g (other coordinates held at 0) and compares
// g across every pair of values of x_source.
EdgeCheck check_edge(const Polynomial& g, std::span<const std::uint32_t> support,
                     std::uint32_t source, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> others;
  for (std::uint32_t v : support) {
    if (v != source) others.push_back(v);
  }
  std::vector<std::uint32_t> point(n, 0);
  std::vector<std::uint32_t> values(p);
  EdgeCheck out;
  for (;;) {
    for (std::uint32_t a = 0; a < p; ++a) {
      point[source] = a;
      values[a] = g.evaluate(point).value();
    }
    for (std::uint32_t a = 1; a < p; ++a) {
      if (values[a] != values[0]) out.functional = true;
    }
    if (p == 2) {
      if (values[1] > values[0]) out.seen_up = true;
      if (values[1] < values[0]) out.seen_down = true;
    }
    std::size_t k = others.size();
    while (k > 0 && ++point[others[k - 1]] == p) {
      point[others[k - 1]] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

EdgeSign classify(const EdgeCheck& c) {
  if (c.seen_up && c.seen_down) return EdgeSign::kAmbivalent;
  return c.seen_up ? EdgeSign::kPositive : EdgeSign::kNegative;
}

EdgeSign multiply(EdgeSign a, EdgeSign b) {
  if (a == EdgeSign::kUnsigned || b == EdgeSign::kUnsigned) return EdgeSign::kUnsigned;
  if (a == EdgeSign::kAmbivalent || b == EdgeSign::kAmbivalent) {
    return EdgeSign::kAmbivalent;
  }
  return a == b ? EdgeSign::kPositive : EdgeSign::kNegative;
}

}  // namespace

WiringDiagram wiring_diagram(const PDS& f, std::uint64_t evaluation_cap) {
  require_valid(f);
  const std::uint32_t p = f.field().characteristic();
  WiringDiagram w;
  w.n = f.size();
  for (std::uint32_t target = 0; target < w.n; ++target) {
    const std::vector<std::uint32_t> support = f[target].support();
    const std::uint64_t cost = state_count(p, static_cast<std::uint32_t>(support.size()));
    for (std::uint32_t source : support) {
      if (cost > evaluation_cap) {
        w.edges.push_back({source, target, EdgeSign::kUnsigned, false});
        continue;
      }
      const EdgeCheck c = check_edge(f[target], support, source, p, w.n);
      if (!c.functional) continue;
      w.edges.push_back(
          {source, target, p == 2 ? classify(c) : EdgeSign::kUnsigned, true});
    }
  }
  std::sort(w.edges.begin(), w.edges.end(), [](const WiringEdge& a, const WiringEdge& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return w;
}

std::pair<std::vector<std::vector<std::uint32_t>>, bool> elementary_cycles(
    const std::vector<std::vector<std::uint32_t>>& adjacency, std::size_t cap) {
  const auto n = static_cast<std::uint32_t>(adjacency.size());
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> blocked(n);
  std::vector<std::vector<std::uint32_t>> blocked_by(n);
  std::vector<std::uint32_t> stack;
  bool stopped = false;

  auto unblock = [&](std::uint32_t u) {
    std::vector<std::uint32_t> work{u};
    while (!work.empty()) {
      const std::uint32_t v = work.back();
      work.pop_back();
      if (!blocked[v]) continue;
      blocked[v] = false;
      for (std::uint32_t w : blocked_by[v]) work.push_back(w);
      blocked_by[v].clear();
    }
  };

  // Johnson's circuit search rooted at s over the subgraph of nodes >= s.
  auto circuit = [&](auto&& self, std::uint32_t v, std::uint32_t s) -> bool {
    bool closed = false;
    stack.push_back(v);
    blocked[v] = true;
    for (std::uint32_t w : adjacency[v]) {
      if (stopped) break;
      if (w < s) continue;
      if (w == s) {
        cycles.push_back(stack);
        if (cycles.size() >= cap) stopped = true;
        closed = true;
      } else if (!blocked[w] && self(self, w, s)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (std::uint32_t w : adjacency[v]) {
        if (w < s) continue;
        auto& list = blocked_by[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    stack.pop_back();
    return closed;
  };

  for (std::uint32_t s = 0; s < n && !stopped; ++s) {
    for (std::uint32_t v = s; v < n; ++v) {
      blocked[v] = false;
      blocked_by[v].clear();
    }
    circuit(circuit, s, s);
  }
  std::sort(cycles.begin(), cycles.end());
  return {std::move(cycles), !stopped};
}

CircuitReport functional_circuits(const PDS& f, std::size_t circuit_cap,
                                  std::uint64_t evaluation_cap) {
  if (f.field().characteristic() != 2) {
    throw UnsupportedError("circuit analysis is only available over F_2, not F_" +
                           std::to_string(f.field().characteristic()));
  }
  const WiringDiagram w = wiring_diagram(f, evaluation_cap);
  std::vector<std::vector<std::uint32_t>> adjacency(w.n);
  for (const WiringEdge& e : w.edges) adjacency[e.source].push_back(e.target);

  auto [cycles, complete] = elementary_cycles(adjacency, circuit_cap);
  CircuitReport report;
  report.complete = complete;
  for (auto& nodes : cycles) {
    EdgeSign sign = EdgeSign::kPositive;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto e = w.edge(nodes[k], nodes[(k + 1) % nodes.size()]);
      sign = multiply(sign, e->sign);
    }
    report.circuits.push_back({std::move(nodes), sign});
  }
  return report;
}

}  // namespace polydyn
