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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polydyn/interpolate.hpp"
#include "polydyn/model.hpp"
#include "polydyn/polynomial.hpp"
#include "polydyn/state.hpp"

namespace polydyn {

// Boolean rule tree. AND and OR are n-ary.
class BooleanExpression {
 public:
  enum class Kind { kConstant, kVariable, kNot, kAnd, kOr };

  static BooleanExpression constant(bool value);
  static BooleanExpression variable(std::uint32_t var);  // 0-based
  static BooleanExpression negation(BooleanExpression operand);
  static BooleanExpression conjunction(std::vector<BooleanExpression> operands);
  static BooleanExpression disjunction(std::vector<BooleanExpression> operands);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  std::uint32_t var() const { return var_; }
  std::span<const BooleanExpression> operands() const { return operands_; }

  bool evaluate(std::span<const std::uint32_t> point) const;
  // Largest variable index + 1, or 0 if no variables occur.
  std::uint32_t arity() const;
  // Canonical text: '!' for NOT, '&' for AND, '|' for OR.
  std::string to_string() const;

  friend bool operator==(const BooleanExpression&,
                         const BooleanExpression&) = default;

 private:
  Kind kind_ = Kind::kConstant;
  bool value_ = false;
  std::uint32_t var_ = 0;
  std::vector<BooleanExpression> operands_;
};

// Parses '!'/'~' (NOT), '&'/'*' (AND), '|' (OR), parentheses, 0, 1 and
// x1..xn with precedence NOT > AND > OR. Columns in errors are 1-based.
BooleanExpression parse_boolean(std::string_view text, std::uint32_t nvars);

// Polynomial over F_2 in nvars variables with the same truth table.
Polynomial boolean_to_polynomial(const BooleanExpression& e, std::uint32_t nvars);

// Multi-valued logical model. Variable i takes values 0..max_levels[i]; its
// next value is looked up in tables[i] by the current values of its
// regulators.
struct LogicalTable {
  std::vector<std::uint32_t> regulators;  // 0-based, in lookup order
  std::map<std::vector<std::uint32_t>, std::uint32_t> rows;

  friend bool operator==(const LogicalTable&, const LogicalTable&) = default;
};

struct LogicalModel {
  std::vector<std::uint32_t> max_levels;
  std::vector<LogicalTable> tables;

  std::uint32_t size() const { return static_cast<std::uint32_t>(max_levels.size()); }
  friend bool operator==(const LogicalModel&, const LogicalModel&) = default;
};

// States introduced when every variable is embedded into one field F_q.
class ExtensionReport {
 public:
  ExtensionReport(std::uint32_t field_size, std::vector<std::uint32_t> max_levels)
      : field_size_(field_size), max_levels_(std::move(max_levels)) {}

  std::uint32_t field_size() const { return field_size_; }
  std::span<const std::uint32_t> max_levels() const { return max_levels_; }
  bool has_extension() const;
  // Some coordinate lies above its variable's declared maximum.
  bool is_extra(const State& x) const;
  // All extra states in lexicographic order; ResourceError beyond cap.
  std::vector<State> extra_states(std::uint64_t cap = std::uint64_t{1} << 20) const;

 private:
  std::uint32_t field_size_;
  std::vector<std::uint32_t> max_levels_;
};

struct LogicalTranslation {
  PDS pds;
  ExtensionReport extension;
};

// Embeds the model into F_q, q the smallest prime above every maximum level.
// Inputs above a regulator's maximum are clamped to that maximum before the
// table lookup, then each coordinate is interpolated. Throws StructuralError
// for incomplete or out-of-range tables.
LogicalTranslation logical_to_pds(
    const LogicalModel& model, std::uint64_t cap = kDefaultInterpolationCap);

enum class ModelKind { kPolynomial, kBoolean, kLogical, kProbabilistic };

std::string_view to_string(ModelKind kind);

struct ProbabilisticRule {
  Polynomial function;
  std::optional<Rational> probability;

  friend bool operator==(const ProbabilisticRule&, const ProbabilisticRule&) = default;
};

using PolynomialRules = std::vector<Polynomial>;
using BooleanRules = std::vector<BooleanExpression>;
using ProbabilisticRules = std::vector<std::vector<ProbabilisticRule>>;

// A parsed model file.
struct ModelDocument {
  ModelKind kind;
  std::uint32_t states;  // the prime p
  std::uint32_t nvars;
  std::optional<std::vector<std::uint32_t>> schedule;  // 0-based order
  std::variant<PolynomialRules, BooleanRules, LogicalModel, ProbabilisticRules> rules;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

// Parses the line-oriented model format:
//   KIND <polynomial|boolean|logical|probabilistic>
//   STATES <p>
//   [SCHEDULE <i1,...,in>]
//   f<i> = <expr> [@ <num>/<den>]        (non-logical kinds)
//   VAR x<i> MAX <m> / TABLE x<i> : <regulators> / <inputs> -> <target>
// '#' starts a comment. n is the largest index used by any f<i> or x<i>; a
// coordinate without a rule keeps its value (f<i> = x<i>). Throws ParseError
// with line and column.
ModelDocument parse_model(std::string_view text);

// Canonical text that parse_model maps back to an equal document.
std::string print_model(const ModelDocument& doc);

struct TranslatedSystem {
  std::variant<PDS, ProbabilisticPDS> system;
  std::optional<ExtensionReport> extension;  // logical documents only
  std::optional<UpdateSchedule> schedule;     // from the SCHEDULE line
};

TranslatedSystem document_to_system(const ModelDocument& doc);

}  // namespace polydyn
