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
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polydyn/monomial.hpp"
#include "polydyn/prime_field.hpp"

namespace polydyn {

// An element of F_p[x1..xn]/(xi^p - xi).
//
// Terms are kept in strictly decreasing lex order with nonzero coefficients
// and every exponent in [0, p-1], so structural equality is equality of
// polynomial functions on F_p^n.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    std::uint32_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  // The zero polynomial.
  Polynomial(PrimeField field, std::uint32_t nvars);

  static Polynomial constant(PrimeField field, std::uint32_t nvars,
                             std::int64_t c);
  // x_{var+1}; var is 0-based.
  static Polynomial variable(PrimeField field, std::uint32_t nvars,
                             std::uint32_t var);
  // Normalizes arbitrary input: reduces coefficients and exponents,
  // combines like terms, drops zeros, sorts.
  static Polynomial from_terms(PrimeField field, std::uint32_t nvars,
                               std::vector<Term> terms);

  const PrimeField& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  FieldElement constant_term() const;
  // Leading data; the polynomial must be nonzero.
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  std::uint32_t leading_coefficient() const { return terms_.front().coeff; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  // c * m * this, with exponent reduction.
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  // Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(std::uint64_t e) const;

  FieldElement evaluate(std::span<const std::uint32_t> point) const;

  // Replaces x_i by g[i]. Throws ResourceError if an intermediate or the
  // result exceeds max_terms.
  Polynomial substitute(std::span<const Polynomial> g,
                        std::size_t max_terms =
                            std::numeric_limits<std::size_t>::max()) const;

  // Sorted 0-based indices of variables that occur.
  std::vector<std::uint32_t> support() const;

  // Renames x_v to x_{perm[v]} in a ring with new_nvars variables.
  Polynomial renamed(std::span<const std::uint32_t> perm,
                     std::uint32_t new_nvars) const;

  // Canonical text, e.g. "x1*x2^2+2*x3+1"; zero prints as "0".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_compatible(const Polynomial& other) const;
  void normalize();

  PrimeField field_;
  std::uint32_t nvars_;
  std::vector<Term> terms_;
};

// Parses the text syntax: terms joined by + or -, factors by *, powers by ^,
// variables x1..xn, integer coefficients, parentheses. Throws ParseError
// (line 1, 1-based column) on malformed text or a variable beyond nvars.
Polynomial parse_polynomial(std::string_view text, PrimeField field,
                            std::uint32_t nvars);

}  // namespace polydyn
