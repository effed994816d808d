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
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "polydyn/dynamics.hpp"
#include "polydyn/errors.hpp"
#include "polydyn/groebner.hpp"

namespace polydyn {

std::vector<State> normalize_cycle(std::vector<State> cycle) {
  const auto first = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), first, cycle.end());
  return cycle;
}

namespace {

void sort_cycles(std::vector<std::vector<State>>& cycles) {
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

std::vector<Polynomial> fixed_point_equations(std::span<const Polynomial> fs,
                                              std::span<const std::uint32_t> coord,
                                              const PrimeField& field,
                                              std::uint32_t n) {
  std::vector<Polynomial> eqs;
  eqs.reserve(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    eqs.push_back(fs[k] - Polynomial::variable(field, n, coord[k]));
  }
  return eqs;
}

std::vector<std::uint32_t> iota(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

void check_enumerable(std::uint32_t p, std::uint32_t n, std::uint64_t cap,
                      const char* what) {
  const std::uint64_t count = state_count(p, n);
  if (count > cap) {
    throw ResourceError(std::string(what) + " needs all " + std::to_string(p) +
                        "^" + std::to_string(n) +
                        " states, above the enumeration cap of " +
                        std::to_string(cap) + "; use the algebraic mode instead");
  }
}

// Successor of a state index under f.
class Stepper {
 public:
  explicit Stepper(const PDS& f)
      : f_(f), p_(f.field().characteristic()), point_(f.size()) {}

  std::uint64_t operator()(std::uint64_t index) {
    const std::uint32_t n = f_.size();
    for (std::uint32_t i = n; i-- > 0;) {
      point_[i] = static_cast<std::uint32_t>(index % p_);
      index /= p_;
    }
    std::uint64_t next = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      next = next * p_ + f_[i].evaluate(point_).value();
    }
    return next;
  }

 private:
  const PDS& f_;
  std::uint32_t p_;
  std::vector<std::uint32_t> point_;
};

}  // namespace

std::vector<State> steady_states(const PDS& f) {
  require_valid(f);
  const std::uint32_t n = f.size();
  const auto coords = iota(n);
  return solve(PolynomialSystem(f.field(), n,
                                fixed_point_equations(f.functions(), coords, f.field(), n)));
}

CycleSearch limit_cycles(const PDS& f, std::uint32_t m, std::size_t composition_cap) {
  require_valid(f);
  if (m == 0) throw std::invalid_argument("cycle length must be positive");
  const PDS fm = iterate(f, m, composition_cap);
  const std::vector<State> periodic = steady_states(fm);

  CycleSearch out;
  std::vector<bool> done(periodic.size(), false);
  for (std::size_t k = 0; k < periodic.size(); ++k) {
    if (done[k]) continue;
    std::vector<State> orbit{periodic[k]};
    for (State x = step(f, periodic[k]); x != periodic[k]; x = step(f, x)) {
      orbit.push_back(x);
    }
    for (const State& x : orbit) {
      done[std::lower_bound(periodic.begin(), periodic.end(), x) - periodic.begin()] = true;
    }
    if (orbit.size() == m) {
      out.cycles.push_back(normalize_cycle(std::move(orbit)));
    } else {
      out.shorter_orbits.push_back(normalize_cycle(std::move(orbit)));
    }
  }
  sort_cycles(out.cycles);
  sort_cycles(out.shorter_orbits);
  return out;
}

std::vector<State> steady_states_probabilistic(const ProbabilisticPDS& f) {
  require_valid(f);
  const std::uint32_t n = f.size();
  std::vector<Polynomial> eqs;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const Polynomial& g : f.choices[i]) {
      eqs.push_back(g - Polynomial::variable(f.field, n, i));
    }
  }
  return solve(PolynomialSystem(f.field, n, std::move(eqs)));
}

AttractorReport attractors_algebraic(const PDS& f, std::uint32_t max_cycle_length,
                                     std::size_t composition_cap) {
  AttractorReport report;
  report.method = AnalysisMethod::kAlgebraic;
  report.steady_states = steady_states(f);
  for (std::uint32_t m = 2; m <= max_cycle_length; ++m) {
    CycleSearch found = limit_cycles(f, m, composition_cap);
    for (auto& c : found.cycles) report.limit_cycles.push_back(std::move(c));
    const auto repeats = std::count_if(found.shorter_orbits.begin(),
                                       found.shorter_orbits.end(),
                                       [](const auto& o) { return o.size() > 1; });
    if (repeats > 0) {
      report.diagnostics.push_back(
          std::to_string(m) + "-cycle search also found " + std::to_string(repeats) +
          " shorter cycle(s) whose length divides " + std::to_string(m));
    }
  }
  sort_cycles(report.limit_cycles);
  return report;
}

AttractorReport attractors_enumerative(const PDS& f, std::uint64_t cap) {
  require_valid(f);
  const std::uint32_t p = f.field().characteristic();
  const std::uint32_t n = f.size();
  check_enumerable(p, n, cap, "enumeration");

  AttractorReport report;
  report.method = AnalysisMethod::kEnumerative;
  const std::uint64_t count = state_count(p, n);
  std::vector<std::uint64_t> run(count, 0);
  Stepper next(f);
  for (std::uint64_t start = 0; start < count; ++start) {
    if (run[start] != 0) continue;
    const std::uint64_t id = start + 1;
    std::uint64_t cur = start;
    while (run[cur] == 0) {
      run[cur] = id;
      cur = next(cur);
    }
    if (run[cur] != id) continue;  // joined an earlier basin
    std::vector<State> cycle{state_from_index(cur, p, n)};
    for (std::uint64_t k = next(cur); k != cur; k = next(k)) {
      cycle.push_back(state_from_index(k, p, n));
    }
    if (cycle.size() == 1) {
      report.steady_states.push_back(std::move(cycle.front()));
    } else {
      report.limit_cycles.push_back(normalize_cycle(std::move(cycle)));
    }
  }
  std::sort(report.steady_states.begin(), report.steady_states.end());
  sort_cycles(report.limit_cycles);
  return report;
}

Trajectory trajectory(const PDS& f, const State& x0) {
  require_valid(f);
  Trajectory t;
  std::map<State, std::size_t> seen;
  State x = x0;
  for (;;) {
    auto [it, fresh] = seen.emplace(x, t.states.size());
    if (!fresh) {
      t.cycle_start = it->second;
      return t;
    }
    t.states.push_back(x);
    x = step(f, x);
  }
}

PhaseSpace phase_space(const PDS& f, std::uint64_t cap) {
  require_valid(f);
  PhaseSpace ps;
  ps.p = f.field().characteristic();
  ps.n = f.size();
  check_enumerable(ps.p, ps.n, cap, "phase space");
  Stepper next(f);
  const std::uint64_t count = ps.node_count();
  ps.edges.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) ps.edges.push_back({s, next(s), Rational(1)});
  return ps;
}

PhaseSpace phase_space(const ProbabilisticPDS& f, std::uint64_t cap) {
  require_valid(f);
  PhaseSpace ps;
  ps.p = f.field.characteristic();
  ps.n = f.size();
  check_enumerable(ps.p, ps.n, cap, "phase space");
  const std::uint64_t count = ps.node_count();
  std::uint64_t transitions = 0;

  for (std::uint64_t s = 0; s < count; ++s) {
    const State x = ps.state(s);
    // Distribution of each coordinate's next value.
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> dist(ps.n);
    for (std::uint32_t i = 0; i < ps.n; ++i) {
      std::map<std::uint32_t, Rational> values;
      for (std::size_t j = 0; j < f.choices[i].size(); ++j) {
        values[f.choices[i][j].evaluate(x).value()] += f.probabilities[i][j];
      }
      for (const auto& [v, q] : values) {
        if (q != Rational(0)) dist[i].emplace_back(v, q);
      }
    }
    // Cartesian product of the coordinate distributions.
    std::vector<std::size_t> pick(ps.n, 0);
    for (;;) {
      std::uint64_t target = 0;
      Rational q = 1;
      for (std::uint32_t i = 0; i < ps.n; ++i) {
        target = target * ps.p + dist[i][pick[i]].first;
        q *= dist[i][pick[i]].second;
      }
      ps.edges.push_back({s, target, q});
      if (++transitions > cap) {
        throw ResourceError("probabilistic phase space exceeds " +
                            std::to_string(cap) + " transitions");
      }
      std::uint32_t i = ps.n;
      while (i > 0 && ++pick[i - 1] == dist[i - 1].size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  std::sort(ps.edges.begin(), ps.edges.end(), [](const PhaseEdge& a, const PhaseEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return ps;
}

}  // namespace polydyn
