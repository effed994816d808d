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

#include "polydyn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "polydyn/errors.hpp"

namespace polydyn {

Polynomial::Polynomial(PrimeField field, std::uint32_t nvars)
    : field_(field), nvars_(nvars) {}

Polynomial Polynomial::constant(PrimeField field, std::uint32_t nvars,
                                std::int64_t c) {
  Polynomial r(field, nvars);
  const std::uint32_t v = field.reduce(c);
  if (v != 0) r.terms_.push_back({Monomial(), v});
  return r;
}

Polynomial Polynomial::variable(PrimeField field, std::uint32_t nvars,
                                std::uint32_t var) {
  if (var >= nvars) {
    throw StructuralError("variable x" + std::to_string(var + 1) +
                          " outside ring of " + std::to_string(nvars) +
                          " variables");
  }
  Polynomial r(field, nvars);
  r.terms_.push_back({Monomial::variable(var), 1});
  return r;
}

Polynomial Polynomial::from_terms(PrimeField field, std::uint32_t nvars,
                                  std::vector<Term> terms) {
  Polynomial r(field, nvars);
  const std::uint32_t p = field.characteristic();
  for (Term& t : terms) {
    if (!t.monomial.is_one() && t.monomial.last_var() >= nvars) {
      throw StructuralError("monomial " + t.monomial.to_string() +
                            " outside ring of " + std::to_string(nvars) +
                            " variables");
    }
    t.monomial = t.monomial.reduced(p);
    t.coeff %= p;
  }
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.monomial > b.monomial;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::uint32_t c = 0;
    std::size_t j = i;
    for (; j < terms_.size() && terms_[j].monomial == terms_[i].monomial; ++j) {
      c = field_.add(c, terms_[j].coeff);
    }
    if (c != 0) {
      if (out != i) terms_[out].monomial = std::move(terms_[i].monomial);
      terms_[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (field_ != other.field_) {
    throw StructuralError("field mismatch: F_" +
                          std::to_string(field_.characteristic()) + " vs F_" +
                          std::to_string(other.field_.characteristic()));
  }
  if (nvars_ != other.nvars_) {
    throw StructuralError("arity mismatch: " + std::to_string(nvars_) +
                          " vs " + std::to_string(other.nvars_) +
                          " variables");
  }
}

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return field_.element(terms_.back().coeff);
  }
  return field_.zero();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r(field_, nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->monomial > b->monomial)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      r.terms_.push_back(*b++);
    } else {
      const std::uint32_t c = field_.add(a->coeff, b->coeff);
      if (c != 0) r.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= field_.characteristic();
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const std::uint32_t p = field_.characteristic();
  c %= p;
  Polynomial r(field_, nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  bool needs_sort = false;
  for (const Term& t : terms_) {
    Monomial prod = t.monomial * m;
    for (const auto& f : prod.factors()) {
      if (f.exp >= p) {
        prod = prod.reduced(p);
        needs_sort = true;
        break;
      }
    }
    r.terms_.push_back({std::move(prod), field_.mul(t.coeff, c)});
  }
  // Multiplying by a monomial preserves the order unless a reduction fired.
  if (needs_sort) r.normalize();
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r(field_, nvars_);
  if (is_zero() || other.is_zero()) return r;
  const std::uint32_t p = field_.characteristic();
  r.terms_.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      r.terms_.push_back({(a.monomial * b.monomial).reduced(p),
                          field_.mul(a.coeff, b.coeff)});
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return scaled(field_.inv(leading_coefficient()));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

FieldElement Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != nvars_) {
    throw StructuralError("point has " + std::to_string(point.size()) +
                          " coordinates, polynomial has " +
                          std::to_string(nvars_) + " variables");
  }
  const std::uint32_t p = field_.characteristic();
  std::uint64_t acc = 0;
  for (const Term& t : terms_) {
    acc = (acc + std::uint64_t{t.coeff} * t.monomial.evaluate(point, p)) % p;
  }
  return field_.element(static_cast<std::int64_t>(acc));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> g,
                                  std::size_t max_terms) const {
  if (g.size() != nvars_) {
    throw StructuralError("substitution needs " + std::to_string(nvars_) +
                          " polynomials, got " + std::to_string(g.size()));
  }
  if (g.empty()) return *this;
  for (const Polynomial& gi : g) {
    if (gi.field_ != field_ || gi.nvars_ != g.front().nvars_) {
      throw StructuralError("substituted polynomials disagree on field or arity");
    }
  }
  const std::uint32_t target_nvars = g.front().nvars_;
  auto check = [&](const Polynomial& q) {
    if (q.size() > max_terms) {
      throw ResourceError("substitution produced " + std::to_string(q.size()) +
                          " terms, cap is " + std::to_string(max_terms));
    }
  };

  // Powers g_v^e are shared across terms.
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> powers;
  auto power = [&](std::uint32_t v, std::uint32_t e) -> const Polynomial& {
    auto it = powers.find({v, e});
    if (it == powers.end()) {
      Polynomial q = g[v].pow(e);
      check(q);
      it = powers.emplace(std::make_pair(v, e), std::move(q)).first;
    }
    return it->second;
  };

  Polynomial result(field_, target_nvars);
  std::vector<Term> acc;
  for (const Term& t : terms_) {
    Polynomial prod = constant(field_, target_nvars, t.coeff);
    for (const auto& f : t.monomial.factors()) {
      prod = prod * power(f.var, f.exp);
      check(prod);
      if (prod.is_zero()) break;
    }
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    // Fold periodically so the accumulator stays near the result size.
    if (acc.size() > 4 * (result.size() + 1024)) {
      result.terms_.insert(result.terms_.end(), acc.begin(), acc.end());
      acc.clear();
      result.normalize();
      check(result);
    }
  }
  result.terms_.insert(result.terms_.end(), acc.begin(), acc.end());
  result.normalize();
  check(result);
  return result;
}

std::vector<std::uint32_t> Polynomial::support() const {
  std::vector<std::uint32_t> vars;
  for (const Term& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::renamed(std::span<const std::uint32_t> perm,
                               std::uint32_t new_nvars) const {
  Polynomial r(field_, new_nvars);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    r.terms_.push_back({t.monomial.renamed(perm), t.coeff});
  }
  r.normalize();
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += '+';
    if (t.monomial.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) {
        s += std::to_string(t.coeff);
        s += '*';
      }
      s += t.monomial.to_string();
    }
  }
  return s;
}

namespace {

// Recursive descent over:
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := atom ('^' integer)?
//   atom    := integer | 'x' integer | '(' sum ')'
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, PrimeField field, std::uint32_t nvars)
      : text_(text), field_(field), nvars_(nvars) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial r = sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, pos_ + 1, what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
        fail("integer too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  Polynomial sum() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial r = product();
    if (negate) r = -r;
    for (;;) {
      if (accept('+')) {
        r = r + product();
      } else if (accept('-')) {
        r = r - product();
      } else {
        return r;
      }
    }
  }

  Polynomial product() {
    Polynomial r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) return base.pow(integer());
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of polynomial");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial r = sum();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ == text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index after 'x'");
      }
      const std::uint64_t idx = integer();
      if (idx == 0 || idx > nvars_) {
        pos_ = at;
        fail("variable x" + std::to_string(idx) + " is not declared (n = " +
             std::to_string(nvars_) + ")");
      }
      return Polynomial::variable(field_, nvars_,
                                  static_cast<std::uint32_t>(idx - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer() % field_.characteristic();
      return Polynomial::constant(field_, nvars_, static_cast<std::int64_t>(v));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  PrimeField field_;
  std::uint32_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, PrimeField field,
                            std::uint32_t nvars) {
  return PolynomialParser(text, field, nvars).parse();
}

}  // namespace polydyn
