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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace polydyn {

// A power product x_{v1}^{e1} ... x_{vk}^{ek}, stored sparsely as factors
// sorted by variable index with nonzero exponents. Variables are 0-based
// internally; variable 0 prints as x1.
//
// Monomial itself does not know the field. Polynomial keeps every exponent
// in [0, p-1]; raw monomials with larger exponents only appear as pair keys
// inside the Groebner engine.
class Monomial {
 public:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  using Factors = boost::container::small_vector<Factor, 4>;

  Monomial() = default;  // the unit monomial 1

  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);
  // Dense exponent vector; zero entries are dropped.
  static Monomial from_exponents(std::span<const std::uint32_t> exponents);

  std::span<const Factor> factors() const {
    return {factors_.data(), factors_.size()};
  }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint64_t degree() const;
  bool contains(std::uint32_t var) const { return exponent(var) != 0; }
  // Smallest variable index present, i.e. the lex-greatest variable.
  // Undefined for the unit monomial.
  std::uint32_t first_var() const { return factors_.front().var; }
  std::uint32_t last_var() const { return factors_.back().var; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Raw product, no exponent reduction.
  Monomial operator*(const Monomial& other) const;
  // this / other; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  // Applies x^p = x to every factor.
  Monomial reduced(std::uint32_t p) const;
  // Renames variable v to perm[v].
  Monomial renamed(std::span<const std::uint32_t> perm) const;

  // Multiplicative value at a point given as residues; caller reduces mod p.
  std::uint64_t evaluate(std::span<const std::uint32_t> point,
                         std::uint32_t p) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic order with x1 > x2 > ... > xn.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

  std::size_t hash() const;

 private:
  Factors factors_;
};

}  // namespace polydyn

template <>
struct std::hash<polydyn::Monomial> {
  std::size_t operator()(const polydyn::Monomial& m) const { return m.hash(); }
};
