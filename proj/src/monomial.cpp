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

#include "polydyn/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace polydyn {

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
  Monomial m;
  if (exp != 0) m.factors_.push_back({var, exp});
  return m;
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  Monomial m;
  for (std::uint32_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] != 0) m.factors_.push_back({v, exponents[v]});
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  for (const Factor& f : factors_) {
    if (f.var == var) return f.exp;
    if (f.var > var) break;
  }
  return 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (factors_.size() > other.factors_.size()) return false;
  auto it = other.factors_.begin();
  const auto end = other.factors_.end();
  for (const Factor& f : factors_) {
    while (it != end && it->var < f.var) ++it;
    if (it == end || it->var != f.var || it->exp < f.exp) return false;
    ++it;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var == b->var) return false;
    if (a->var < b->var) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

namespace {

// Merges two factor lists, combining equal variables with op.
template <typename Op>
Monomial::Factors merge(const Monomial::Factors& x, const Monomial::Factors& y,
                        Op op) {
  Monomial::Factors out;
  out.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->var < b->var)) {
      out.push_back(*a++);
    } else if (a == x.end() || b->var < a->var) {
      out.push_back(*b++);
    } else {
      out.push_back({a->var, op(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  m.factors_ = merge(factors_, other.factors_,
                     [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); });
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_ = merge(factors_, other.factors_,
                     [](std::uint32_t a, std::uint32_t b) { return a + b; });
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial m;
  auto b = other.factors_.begin();
  for (const Factor& f : factors_) {
    while (b != other.factors_.end() && b->var < f.var) ++b;
    std::uint32_t e = f.exp;
    if (b != other.factors_.end() && b->var == f.var) e -= b->exp;
    if (e != 0) m.factors_.push_back({f.var, e});
  }
  return m;
}

Monomial Monomial::reduced(std::uint32_t p) const {
  Monomial m = *this;
  for (Factor& f : m.factors_) {
    if (f.exp >= p) f.exp = (f.exp - 1) % (p - 1) + 1;
  }
  return m;
}

Monomial Monomial::renamed(std::span<const std::uint32_t> perm) const {
  Monomial m;
  m.factors_.reserve(factors_.size());
  for (const Factor& f : factors_) m.factors_.push_back({perm[f.var], f.exp});
  std::sort(m.factors_.begin(), m.factors_.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  return m;
}

std::uint64_t Monomial::evaluate(std::span<const std::uint32_t> point,
                                 std::uint32_t p) const {
  std::uint64_t r = 1;
  for (const Factor& f : factors_) {
    const std::uint64_t base = point[f.var] % p;
    if (base == 0) return 0;
    for (std::uint32_t k = 0; k < f.exp; ++k) r = r * base % p;
  }
  return r % p;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const Factor& f : factors_) {
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(f.var + 1);
    if (f.exp != 1) {
      s += '^';
      s += std::to_string(f.exp);
    }
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto x = a.factors_.begin();
  auto y = b.factors_.begin();
  for (; x != a.factors_.end() && y != b.factors_.end(); ++x, ++y) {
    // A smaller variable index is a more significant variable.
    if (x->var != y->var) {
      return x->var < y->var ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
    if (x->exp != y->exp) return x->exp <=> y->exp;
  }
  if (x != a.factors_.end()) return std::strong_ordering::greater;
  if (y != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Factor& f : factors_) {
    h ^= (std::size_t{f.var} << 20) ^ f.exp;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace polydyn
