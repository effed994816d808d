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

#include "polydyn/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "polydyn/errors.hpp"

namespace polydyn {

MonomialOrder::MonomialOrder(std::vector<std::uint32_t> precedence)
    : precedence_(std::move(precedence)) {
  std::vector<bool> seen(precedence_.size(), false);
  for (std::uint32_t v : precedence_) {
    if (v >= precedence_.size() || seen[v]) {
      throw std::invalid_argument("variable precedence is not a permutation");
    }
    seen[v] = true;
  }
}

bool MonomialOrder::is_declaration_order() const {
  for (std::uint32_t r = 0; r < precedence_.size(); ++r) {
    if (precedence_[r] != r) return false;
  }
  return true;
}

void MonomialOrder::check_arity(std::uint32_t nvars) const {
  if (!precedence_.empty() && precedence_.size() != nvars) {
    throw StructuralError("monomial order ranks " +
                          std::to_string(precedence_.size()) +
                          " variables, ring has " + std::to_string(nvars));
  }
}

PolynomialSystem::PolynomialSystem(PrimeField field_, std::uint32_t nvars_,
                                   std::vector<Polynomial> generators_)
    : field(field_), nvars(nvars_), generators(std::move(generators_)) {
  for (const Polynomial& g : generators) {
    if (g.field() != field || g.nvars() != nvars) {
      throw StructuralError("generator " + g.to_string() +
                            " does not live in F_" +
                            std::to_string(field.characteristic()) + "[x1..x" +
                            std::to_string(nvars) + "]");
    }
  }
}

namespace {

using Term = Polynomial::Term;

// Renaming maps between a custom precedence and declaration order.
struct Renaming {
  std::vector<std::uint32_t> to_internal;
  std::vector<std::uint32_t> to_external;

  Renaming(const MonomialOrder& order, std::uint32_t nvars) {
    to_external.assign(order.precedence().begin(), order.precedence().end());
    to_internal.resize(nvars);
    for (std::uint32_t r = 0; r < nvars; ++r) to_internal[to_external[r]] = r;
  }
};

// (work[pos..]) - q, both sorted decreasing.
std::vector<Term> subtract_tail(const std::vector<Term>& work, std::size_t pos,
                                std::span<const Term> q, const PrimeField& f) {
  std::vector<Term> out;
  out.reserve(work.size() - pos + q.size());
  auto a = work.begin() + static_cast<std::ptrdiff_t>(pos);
  auto b = q.begin();
  while (a != work.end() || b != q.end()) {
    if (b == q.end() || (a != work.end() && a->monomial > b->monomial)) {
      out.push_back(*a++);
    } else if (a == work.end() || b->monomial > a->monomial) {
      out.push_back({b->monomial, f.neg(b->coeff)});
      ++b;
    } else {
      const std::uint32_t c = f.sub(a->coeff, b->coeff);
      if (c != 0) out.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return out;
}

// Division in declaration order. Reducers must be nonzero.
Polynomial reduce_natural(const Polynomial& f,
                          std::span<const Polynomial* const> reducers) {
  const PrimeField& field = f.field();
  std::vector<Term> work(f.terms().begin(), f.terms().end());
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& lt = work[pos];
    const Polynomial* divisor = nullptr;
    for (const Polynomial* g : reducers) {
      if (g->leading_monomial().divides(lt.monomial)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const std::uint32_t c =
        field.mul(lt.coeff, field.inv(divisor->leading_coefficient()));
    const Polynomial q =
        divisor->times_term(lt.monomial / divisor->leading_monomial(), c);
    work = subtract_tail(work, pos, q.terms(), field);
    pos = 0;
  }
  return Polynomial::from_terms(field, f.nvars(), std::move(rem));
}

struct Entry {
  Monomial lm;
  std::optional<Polynomial> poly;  // empty for a field equation
  std::uint32_t fe_var = 0;
  bool active = true;
};

struct Pair {
  std::uint32_t i;
  std::uint32_t j;  // i < j
  Monomial lcm;
};

// Buchberger in declaration order with implicit field equations.
class BuchbergerEngine {
 public:
  BuchbergerEngine(PrimeField field, std::uint32_t nvars)
      : field_(field), nvars_(nvars) {
    const std::uint32_t p = field.characteristic();
    // Field equations: pairwise coprime, so no pairs among them.
    for (std::uint32_t v = 0; v < nvars; ++v) {
      entries_.push_back({Monomial::variable(v, p), std::nullopt, v, true});
    }
  }

  // Returns the reduced basis, or {1} if the ideal is the unit ideal.
  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    for (const Polynomial& g : generators) {
      if (!insert(reduce(g))) return unit();
    }
    while (!pairs_.empty()) {
      const Pair pair = pop_pair();
      if (!insert(reduce(s_poly(pair)))) return unit();
    }
    return reduced_basis();
  }

 private:
  std::vector<Polynomial> unit() const {
    return {Polynomial::constant(field_, nvars_, 1)};
  }

  Polynomial reduce(const Polynomial& f) const {
    std::vector<const Polynomial*> reducers;
    for (const Entry& e : entries_) {
      if (e.active && e.poly) reducers.push_back(&*e.poly);
    }
    return reduce_natural(f, reducers);
  }

  Polynomial s_poly(const Pair& pair) const {
    const Entry& a = entries_[pair.i];
    const Entry& b = entries_[pair.j];
    if (!a.poly) return field_equation_s_polynomial(*b.poly, a.fe_var);
    if (!b.poly) return field_equation_s_polynomial(*a.poly, b.fe_var);
    return s_polynomial(*a.poly, *b.poly);
  }

  // Normal selection: smallest lcm first, ties by insertion.
  Pair pop_pair() {
    auto best = pairs_.begin();
    for (auto it = std::next(best); it != pairs_.end(); ++it) {
      const auto c = it->lcm <=> best->lcm;
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) {
        best = it;
      }
    }
    Pair out = std::move(*best);
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    return out;
  }

  // Adds a reduced polynomial; false if it is a nonzero constant.
  bool insert(const Polynomial& r) {
    if (r.is_zero()) return true;
    if (r.is_constant()) return false;
    const Polynomial h = r.monic();
    const auto hi = static_cast<std::uint32_t>(entries_.size());
    entries_.push_back({h.leading_monomial(), h, 0, true});
    update(hi);
    return true;
  }

  // Gebauer-Moeller installation of new pairs for entry h.
  void update(std::uint32_t h) {
    const Monomial& lmh = entries_[h].lm;
    std::vector<Pair> candidates;
    std::vector<bool> coprime;
    for (std::uint32_t g = 0; g < h; ++g) {
      if (!entries_[g].active) continue;
      candidates.push_back({g, h, entries_[g].lm.lcm(lmh)});
      coprime.push_back(entries_[g].lm.coprime(lmh));
    }

    std::vector<Pair> kept;
    std::vector<bool> kept_coprime;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      bool keep = coprime[k];
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < candidates.size() && keep; ++l) {
          if (candidates[l].lcm.divides(candidates[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < kept.size() && keep; ++l) {
          if (kept[l].lcm.divides(candidates[k].lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(candidates[k]);
        kept_coprime.push_back(coprime[k]);
      }
    }

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (Pair& pr : pairs_) {
      const bool redundant =
          lmh.divides(pr.lcm) &&
          entries_[pr.i].lm.lcm(lmh) != pr.lcm &&
          entries_[pr.j].lm.lcm(lmh) != pr.lcm;
      if (!redundant) old.push_back(std::move(pr));
    }
    pairs_ = std::move(old);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (!kept_coprime[k]) pairs_.push_back(std::move(kept[k]));
    }

    for (std::uint32_t g = 0; g < h; ++g) {
      if (entries_[g].active && lmh.divides(entries_[g].lm)) {
        entries_[g].active = false;
      }
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<const Polynomial*> polys;
    for (const Entry& e : entries_) {
      if (e.active && e.poly) polys.push_back(&*e.poly);
    }
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (std::size_t k = 0; k < polys.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t l = 0; l < polys.size(); ++l) {
        if (l != k) others.push_back(polys[l]);
      }
      out.push_back(reduce_natural(*polys[k], others).monic());
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.leading_monomial() < b.leading_monomial();
    });
    return out;
  }

  PrimeField field_;
  std::uint32_t nvars_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
};

void check_same_ring(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) {
    if (g.field() != f.field() || g.nvars() != f.nvars()) {
      throw StructuralError("basis element " + g.to_string() +
                            " does not share the ring of " + f.to_string());
    }
  }
}

std::vector<Polynomial> rename_all(std::span<const Polynomial> polys,
                                   std::span<const std::uint32_t> perm) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& f : polys) out.push_back(f.renamed(perm, f.nvars()));
  return out;
}

// Back substitution over a reduced lex basis in declaration order. Elements
// are grouped by their greatest variable; variables are fixed from xn up to
// x1 and every element is checked as soon as all its variables are fixed.
void extend_solutions(std::uint32_t level, std::vector<std::uint32_t>& point,
                      const std::vector<std::vector<const Polynomial*>>& by_var,
                      std::uint32_t p, std::vector<State>& out) {
  const std::uint32_t var = level - 1;
  for (std::uint32_t v = 0; v < p; ++v) {
    point[var] = v;
    bool ok = true;
    for (const Polynomial* g : by_var[var]) {
      if (g->evaluate(point).value() != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (var == 0) {
      out.emplace_back(point);
    } else {
      extend_solutions(var, point, by_var, p, out);
    }
  }
  point[var] = 0;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars()) {
    throw StructuralError("S-polynomial of polynomials from different rings");
  }
  if (a.is_zero() || b.is_zero()) {
    throw std::invalid_argument("S-polynomial of the zero polynomial");
  }
  const PrimeField& f = a.field();
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  const Polynomial left =
      a.times_term(l / a.leading_monomial(), f.inv(a.leading_coefficient()));
  const Polynomial right =
      b.times_term(l / b.leading_monomial(), f.inv(b.leading_coefficient()));
  return left - right;
}

Polynomial field_equation_s_polynomial(const Polynomial& g, std::uint32_t var) {
  if (g.is_zero()) {
    throw std::invalid_argument("S-polynomial of the zero polynomial");
  }
  const std::uint32_t e = g.leading_monomial().exponent(var);
  if (e == 0) return Polynomial(g.field(), g.nvars());
  const std::uint32_t p = g.field().characteristic();
  return g.times_term(Monomial::variable(var, p - e),
                      g.field().inv(g.leading_coefficient()));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
  check_same_ring(f, basis);
  order.check_arity(f.nvars());
  if (order.is_declaration_order()) {
    std::vector<const Polynomial*> reducers;
    for (const Polynomial& g : basis) {
      if (!g.is_zero()) reducers.push_back(&g);
    }
    return reduce_natural(f, reducers);
  }
  const Renaming ren(order, f.nvars());
  const std::vector<Polynomial> renamed = rename_all(basis, ren.to_internal);
  std::vector<const Polynomial*> reducers;
  for (const Polynomial& g : renamed) {
    if (!g.is_zero()) reducers.push_back(&g);
  }
  return reduce_natural(f.renamed(ren.to_internal, f.nvars()), reducers)
      .renamed(ren.to_external, f.nvars());
}

GroebnerBasis buchberger(const PolynomialSystem& system,
                         const MonomialOrder& order) {
  order.check_arity(system.nvars);
  if (order.is_declaration_order()) {
    BuchbergerEngine engine(system.field, system.nvars);
    return GroebnerBasis(system.field, system.nvars, order,
                         engine.run(system.generators));
  }
  const Renaming ren(order, system.nvars);
  BuchbergerEngine engine(system.field, system.nvars);
  std::vector<Polynomial> internal =
      engine.run(rename_all(system.generators, ren.to_internal));
  return GroebnerBasis(system.field, system.nvars, order,
                       rename_all(internal, ren.to_external));
}

std::vector<State> solve(const GroebnerBasis& basis) {
  std::vector<State> out;
  if (basis.is_unit()) return out;
  const std::uint32_t n = basis.nvars();
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const MonomialOrder& order = basis.order();
  const bool natural = order.is_declaration_order();
  std::optional<Renaming> ren;
  std::vector<Polynomial> internal;
  std::span<const Polynomial> elements = basis.elements();
  if (!natural) {
    ren.emplace(order, n);
    internal = rename_all(elements, ren->to_internal);
    elements = internal;
  }

  std::vector<std::vector<const Polynomial*>> by_var(n);
  for (const Polynomial& g : elements) {
    // Nonconstant: the unit basis was handled above.
    by_var[g.leading_monomial().first_var()].push_back(&g);
  }
  std::vector<std::uint32_t> point(n, 0);
  extend_solutions(n, point, by_var, basis.field().characteristic(), out);

  if (!natural) {
    for (State& s : out) {
      State ext{std::vector<std::uint32_t>(n)};
      for (std::uint32_t r = 0; r < n; ++r) ext[ren->to_external[r]] = s[r];
      s = std::move(ext);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<State> solve(const PolynomialSystem& system,
                         const MonomialOrder& order) {
  return solve(buchberger(system, order));
}

}  // namespace polydyn
