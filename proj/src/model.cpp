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

#include "polydyn/model.hpp"

#include <limits>
#include <stdexcept>
#include <sstream>

#include "polydyn/errors.hpp"

namespace polydyn {

PDS PDS::identity(PrimeField field, std::uint32_t n) {
  std::vector<Polynomial> fs;
  fs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    fs.push_back(Polynomial::variable(field, n, i));
  }
  return PDS(field, std::move(fs));
}

ProbabilisticPDS ProbabilisticPDS::uniform(
    PrimeField field, std::vector<std::vector<Polynomial>> choices) {
  ProbabilisticPDS out{field, std::move(choices), {}};
  for (const auto& c : out.choices) {
    const auto r = static_cast<std::int64_t>(c.size());
    out.probabilities.emplace_back(c.size(), r == 0 ? Rational(0) : Rational(1, r));
  }
  return out;
}

std::uint64_t ProbabilisticPDS::selection_count() const {
  std::uint64_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / c.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= c.size();
  }
  return total;
}

PDS ProbabilisticPDS::selection(std::span<const std::uint32_t> pick) const {
  if (pick.size() != choices.size()) {
    throw StructuralError("selection has " + std::to_string(pick.size()) +
                          " entries for " + std::to_string(choices.size()) +
                          " coordinates");
  }
  std::vector<Polynomial> fs;
  fs.reserve(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    fs.push_back(choices[i].at(pick[i]));
  }
  return PDS(field, std::move(fs));
}

namespace {

std::string ring_name(const PrimeField& field, std::size_t n) {
  return "F_" + std::to_string(field.characteristic()) + "[x1..x" +
         std::to_string(n) + "]";
}

void check_function(const Polynomial& g, const PrimeField& field, std::size_t n,
                    const std::string& label, std::vector<std::string>& out) {
  if (g.field() != field) {
    out.push_back(label + " is over F_" +
                  std::to_string(g.field().characteristic()) +
                  ", system is over F_" + std::to_string(field.characteristic()));
  }
  if (g.nvars() != n) {
    out.push_back(label + " has " + std::to_string(g.nvars()) +
                  " variables, system has " + std::to_string(n) +
                  " coordinates (expected " + ring_name(field, n) + ")");
  }
}

std::string join(const std::vector<std::string>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) os << "; ";
    os << items[i];
  }
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const PDS& f) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    check_function(f[i], f.field(), f.size(), "f" + std::to_string(i + 1), out);
  }
  return out;
}

std::vector<std::string> validate(const ProbabilisticPDS& f) {
  std::vector<std::string> out;
  const std::size_t n = f.choices.size();
  if (f.probabilities.size() != n) {
    out.push_back("probabilities given for " +
                  std::to_string(f.probabilities.size()) + " of " +
                  std::to_string(n) + " coordinates");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string fi = "f" + std::to_string(i + 1);
    if (f.choices[i].empty()) out.push_back(fi + " has no candidate functions");
    for (std::size_t j = 0; j < f.choices[i].size(); ++j) {
      check_function(f.choices[i][j], f.field, n,
                     fi + " candidate " + std::to_string(j + 1), out);
    }
    if (i >= f.probabilities.size()) continue;
    const auto& probs = f.probabilities[i];
    if (probs.size() != f.choices[i].size()) {
      out.push_back(fi + " has " + std::to_string(f.choices[i].size()) +
                    " candidates but " + std::to_string(probs.size()) +
                    " probabilities");
      continue;
    }
    Rational sum = 0;
    for (const Rational& q : probs) {
      if (q < Rational(0)) out.push_back(fi + " has a negative probability");
      sum += q;
    }
    if (sum != Rational(1)) {
      std::ostringstream os;
      os << fi << ": probabilities sum to " << sum.numerator();
      if (sum.denominator() != 1) os << '/' << sum.denominator();
      os << " (" << boost::rational_cast<double>(sum) << "), not 1";
      out.push_back(os.str());
    }
  }
  return out;
}

void require_valid(const PDS& f) {
  const auto problems = validate(f);
  if (!problems.empty()) throw StructuralError(join(problems));
}

void require_valid(const ProbabilisticPDS& f) {
  const auto problems = validate(f);
  if (!problems.empty()) throw StructuralError(join(problems));
}

State step(const PDS& f, const State& x) {
  if (x.size() != f.size()) {
    throw StructuralError("state has " + std::to_string(x.size()) +
                          " coordinates, system has " + std::to_string(f.size()));
  }
  std::vector<std::uint32_t> next(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    next[i] = f[i].evaluate(x.coords()).value();
  }
  return State(std::move(next));
}

PDS sequential_to_synchronous(const PDS& f, const UpdateSchedule& schedule) {
  require_valid(f);
  if (schedule.kind() == UpdateSchedule::Kind::kSynchronous) return f;
  const auto order = schedule.order();
  const std::uint32_t n = f.size();
  std::vector<bool> seen(n, false);
  bool ok = order.size() == n;
  for (std::uint32_t i : order) {
    if (i >= n || seen[i]) {
      ok = false;
      break;
    }
    seen[i] = true;
  }
  if (!ok) {
    throw StructuralError("update order is not a permutation of 1.." +
                          std::to_string(n));
  }
  // current[i] expresses coordinate i, as seen mid-sweep, in terms of the
  // state at the start of the sweep.
  const PDS id = PDS::identity(f.field(), n);
  std::vector<Polynomial> current(id.functions().begin(), id.functions().end());
  for (std::uint32_t i : order) {
    current[i] = f[i].substitute(current);
  }
  return PDS(f.field(), std::move(current));
}

PDS iterate(const PDS& f, std::uint32_t m, std::size_t max_terms) {
  require_valid(f);
  if (m == 0) throw std::invalid_argument("iteration count must be positive");
  std::vector<Polynomial> g(f.functions().begin(), f.functions().end());
  for (std::uint32_t k = 1; k < m; ++k) {
    std::vector<Polynomial> next;
    next.reserve(g.size());
    for (const Polynomial& fi : f.functions()) {
      next.push_back(fi.substitute(g, max_terms));
    }
    g = std::move(next);
  }
  return PDS(f.field(), std::move(g));
}

}  // namespace polydyn
