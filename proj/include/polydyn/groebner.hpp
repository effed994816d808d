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
#include <span>
#include <vector>

#include "polydyn/polynomial.hpp"
#include "polydyn/state.hpp"

namespace polydyn {

// Lexicographic order with a chosen variable precedence. precedence[0] is
// the greatest variable. An empty precedence means declaration order
// (x1 > x2 > ... > xn) for any arity.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  // Throws std::invalid_argument unless precedence is a permutation of
  // 0..k-1.
  explicit MonomialOrder(std::vector<std::uint32_t> precedence);

  bool is_declaration_order() const;
  std::span<const std::uint32_t> precedence() const { return precedence_; }
  // Throws StructuralError if the precedence does not cover nvars.
  void check_arity(std::uint32_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::uint32_t> precedence_;
};

// Generators of an ideal in F_p[x1..xn]. The field equations xi^p - xi are
// always implied and never need to be listed.
struct PolynomialSystem {
  PolynomialSystem(PrimeField field, std::uint32_t nvars,
                   std::vector<Polynomial> generators);

  PrimeField field;
  std::uint32_t nvars;
  std::vector<Polynomial> generators;
};

// Reduced Groebner basis of <generators, x1^p - x1, ..., xn^p - xn>.
//
// Field equations are kept implicit: every stored element is already reduced
// modulo them, and an equation xi^p - xi belongs to the full basis exactly
// when no stored leading monomial is a pure power of xi. Elements are monic
// and sorted by increasing leading monomial under the order.
class GroebnerBasis {
 public:
  GroebnerBasis(PrimeField field, std::uint32_t nvars, MonomialOrder order,
                std::vector<Polynomial> elements)
      : field_(field),
        nvars_(nvars),
        order_(std::move(order)),
        elements_(std::move(elements)) {}

  const PrimeField& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Polynomial> elements() const { return elements_; }
  // The ideal is the whole ring (no solutions).
  bool is_unit() const {
    return elements_.size() == 1 && elements_[0].is_constant();
  }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  PrimeField field_;
  std::uint32_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Full multivariate division remainder: no term of the result is divisible
// by the leading monomial of a (nonzero) basis element.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order = {});

// S-polynomial of two nonzero polynomials in declaration order.
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

// S-polynomial of g against the field equation of variable var, reduced
// modulo the field equations. Zero if var does not divide LM(g).
Polynomial field_equation_s_polynomial(const Polynomial& g, std::uint32_t var);

GroebnerBasis buchberger(const PolynomialSystem& system,
                         const MonomialOrder& order = {});

// Common F_p-rational zeros, sorted lexicographically.
std::vector<State> solve(const PolynomialSystem& system,
                         const MonomialOrder& order = {});
std::vector<State> solve(const GroebnerBasis& basis);

}  // namespace polydyn
