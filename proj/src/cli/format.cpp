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

#include <map>
#include <sstream>

#include "polydyn/cli.hpp"

namespace polydyn::cli {

namespace {

std::string join_states(const std::vector<State>& states, std::uint32_t p,
                        const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k != 0) out += sep;
    out += states[k].to_digits(p);
  }
  return out;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string probability_text(const Rational& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += '/' + std::to_string(q.denominator());
  return s;
}

}  // namespace

std::string format_report(const AnalysisResult& result, std::uint32_t max_cycle_length) {
  const AttractorReport& r = result.report;
  std::ostringstream os;
  os << "steady states: " << r.steady_states.size() << '\n';
  for (const State& x : r.steady_states) os << x.to_digits(result.p) << '\n';

  std::map<std::size_t, std::vector<const std::vector<State>*>> by_length;
  for (std::uint32_t m = 2; m <= max_cycle_length; ++m) by_length[m];
  for (const auto& c : r.limit_cycles) by_length[c.size()].push_back(&c);
  for (const auto& [m, cycles] : by_length) {
    os << m << "-cycles: " << cycles.size() << '\n';
    for (const auto* c : cycles) os << join_states(*c, result.p, " ") << '\n';
  }
  return os.str();
}

std::string format_trajectory(const Trajectory& t, std::uint32_t p) {
  return join_states(t.states, p, " -> ") +
         (t.reaches_steady_state() ? " -> [steady state]" : " -> [cycle]");
}

std::string wiring_dot(const WiringDiagram& w, const CircuitReport* circuits) {
  std::ostringstream os;
  os << "digraph wiring {\n";
  for (std::uint32_t v = 0; v < w.n; ++v) os << "  x" << v + 1 << ";\n";
  for (const WiringEdge& e : w.edges) {
    os << "  x" << e.source + 1 << " -> x" << e.target + 1;
    switch (e.sign) {
      case EdgeSign::kPositive:
        os << " [sign=positive, label=\"+\", color=darkgreen, arrowhead=normal";
        break;
      case EdgeSign::kNegative:
        os << " [sign=negative, label=\"-\", color=red, arrowhead=tee";
        break;
      case EdgeSign::kAmbivalent:
        os << " [sign=ambivalent, label=\"+/-\", color=blue, arrowhead=dot";
        break;
      case EdgeSign::kUnsigned:
        os << " [arrowhead=normal";
        break;
    }
    if (!e.verified) os << ", style=dashed, verified=false";
    os << "];\n";
  }
  if (circuits != nullptr) {
    for (const Circuit& c : circuits->circuits) {
      os << "  // circuit";
      for (std::uint32_t v : c.nodes) os << " x" << v + 1 << " ->";
      os << " x" << c.nodes.front() + 1 << " : " << to_string(c.sign) << '\n';
    }
    if (!circuits->complete) os << "  // circuit list truncated at the cap\n";
  }
  os << "}\n";
  return os.str();
}

std::string phase_dot(const PhaseSpace& ps, bool label_probabilities) {
  std::ostringstream os;
  os << "digraph phase_space {\n";
  for (std::uint64_t s = 0; s < ps.node_count(); ++s) {
    os << "  " << quoted(ps.state(s).to_digits(ps.p)) << ";\n";
  }
  for (const PhaseEdge& e : ps.edges) {
    os << "  " << quoted(ps.state(e.from).to_digits(ps.p)) << " -> "
       << quoted(ps.state(e.to).to_digits(ps.p));
    if (label_probabilities) os << " [label=" << quoted(probability_text(e.probability)) << ']';
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string trajectory_dot(const Trajectory& t, std::uint32_t p) {
  std::ostringstream os;
  os << "digraph trajectory {\n";
  for (const State& x : t.states) os << "  " << quoted(x.to_digits(p)) << ";\n";
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    const State& next = k + 1 < t.states.size() ? t.states[k + 1] : t.states[t.cycle_start];
    os << "  " << quoted(t.states[k].to_digits(p)) << " -> " << quoted(next.to_digits(p))
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polydyn::cli
