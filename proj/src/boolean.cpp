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

#include <cctype>
#include <limits>

#include "polydyn/errors.hpp"
#include "polydyn/translate.hpp"

namespace polydyn {

BooleanExpression BooleanExpression::constant(bool value) {
  BooleanExpression e;
  e.kind_ = Kind::kConstant;
  e.value_ = value;
  return e;
}

BooleanExpression BooleanExpression::variable(std::uint32_t var) {
  BooleanExpression e;
  e.kind_ = Kind::kVariable;
  e.var_ = var;
  return e;
}

BooleanExpression BooleanExpression::negation(BooleanExpression operand) {
  BooleanExpression e;
  e.kind_ = Kind::kNot;
  e.operands_.push_back(std::move(operand));
  return e;
}

BooleanExpression BooleanExpression::conjunction(
    std::vector<BooleanExpression> operands) {
  BooleanExpression e;
  e.kind_ = Kind::kAnd;
  e.operands_ = std::move(operands);
  return e;
}

BooleanExpression BooleanExpression::disjunction(
    std::vector<BooleanExpression> operands) {
  BooleanExpression e;
  e.kind_ = Kind::kOr;
  e.operands_ = std::move(operands);
  return e;
}

bool BooleanExpression::evaluate(std::span<const std::uint32_t> point) const {
  switch (kind_) {
    case Kind::kConstant:
      return value_;
    case Kind::kVariable:
      return point[var_] != 0;
    case Kind::kNot:
      return !operands_[0].evaluate(point);
    case Kind::kAnd:
      for (const auto& c : operands_) {
        if (!c.evaluate(point)) return false;
      }
      return true;
    case Kind::kOr:
      for (const auto& c : operands_) {
        if (c.evaluate(point)) return true;
      }
      return false;
  }
  return false;
}

std::uint32_t BooleanExpression::arity() const {
  if (kind_ == Kind::kVariable) return var_ + 1;
  std::uint32_t a = 0;
  for (const auto& c : operands_) a = std::max(a, c.arity());
  return a;
}

std::string BooleanExpression::to_string() const {
  auto wrapped = [](const BooleanExpression& c, bool wrap) {
    return wrap ? "(" + c.to_string() + ")" : c.to_string();
  };
  switch (kind_) {
    case Kind::kConstant:
      return value_ ? "1" : "0";
    case Kind::kVariable:
      return "x" + std::to_string(var_ + 1);
    case Kind::kNot: {
      const Kind k = operands_[0].kind_;
      return "!" + wrapped(operands_[0], k == Kind::kAnd || k == Kind::kOr);
    }
    case Kind::kAnd:
    case Kind::kOr: {
      const char* sep = kind_ == Kind::kAnd ? " & " : " | ";
      std::string s;
      for (std::size_t i = 0; i < operands_.size(); ++i) {
        if (i != 0) s += sep;
        const Kind k = operands_[i].kind_;
        s += wrapped(operands_[i], k == Kind::kAnd || k == Kind::kOr);
      }
      return s;
    }
  }
  return {};
}

namespace {

class BooleanParser {
 public:
  BooleanParser(std::string_view text, std::uint32_t nvars)
      : text_(text), nvars_(nvars) {}

  BooleanExpression parse() {
    if (peek() == '\0') fail("empty expression");
    BooleanExpression e = disjunction();
    if (peek() != '\0') unexpected();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, pos_ + 1, what);
  }

  [[noreturn]] void unexpected() const {
    const char c = text_[pos_];
    if (c == '+') fail("'+' is not a Boolean operator; use '|' for OR");
    fail(std::string("unexpected '") + c + "'");
  }

  char peek() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BooleanExpression disjunction() {
    std::vector<BooleanExpression> terms;
    terms.push_back(conjunction());
    while (peek() == '|') {
      ++pos_;
      terms.push_back(conjunction());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return BooleanExpression::disjunction(std::move(terms));
  }

  BooleanExpression conjunction() {
    std::vector<BooleanExpression> factors;
    factors.push_back(unary());
    for (char c = peek(); c == '&' || c == '*'; c = peek()) {
      ++pos_;
      factors.push_back(unary());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return BooleanExpression::conjunction(std::move(factors));
  }

  BooleanExpression unary() {
    const char c = peek();
    if (c == '!' || c == '~') {
      ++pos_;
      return BooleanExpression::negation(unary());
    }
    return atom();
  }

  BooleanExpression atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (c == '(') {
      ++pos_;
      BooleanExpression e = disjunction();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("Boolean constants are 0 and 1");
      }
      return BooleanExpression::constant(c == '1');
    }
    if (c == 'x') {
      const std::size_t at = pos_++;
      std::uint64_t idx = 0;
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (idx > std::numeric_limits<std::uint32_t>::max()) {
          fail("variable index too large");
        }
        ++pos_;
      }
      if (pos_ == start) fail("expected variable index after 'x'");
      if (idx == 0 || idx > nvars_) {
        pos_ = at;
        fail("variable x" + std::to_string(idx) + " is not declared (n = " +
             std::to_string(nvars_) + ")");
      }
      return BooleanExpression::variable(static_cast<std::uint32_t>(idx - 1));
    }
    unexpected();
  }

  std::string_view text_;
  std::uint32_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

BooleanExpression parse_boolean(std::string_view text, std::uint32_t nvars) {
  return BooleanParser(text, nvars).parse();
}

Polynomial boolean_to_polynomial(const BooleanExpression& e, std::uint32_t nvars) {
  const PrimeField f2(2);
  const Polynomial one = Polynomial::constant(f2, nvars, 1);
  switch (e.kind()) {
    case BooleanExpression::Kind::kConstant:
      return Polynomial::constant(f2, nvars, e.value() ? 1 : 0);
    case BooleanExpression::Kind::kVariable:
      return Polynomial::variable(f2, nvars, e.var());
    case BooleanExpression::Kind::kNot:
      return one + boolean_to_polynomial(e.operands()[0], nvars);
    case BooleanExpression::Kind::kAnd: {
      Polynomial r = one;
      for (const auto& c : e.operands()) r = r * boolean_to_polynomial(c, nvars);
      return r;
    }
    case BooleanExpression::Kind::kOr: {
      // a | b = !(!a & !b)
      Polynomial r = one;
      for (const auto& c : e.operands()) {
        r = r * (one + boolean_to_polynomial(c, nvars));
      }
      return one + r;
    }
  }
  return Polynomial(f2, nvars);
}

}  // namespace polydyn
