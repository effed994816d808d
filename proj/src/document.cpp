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
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

#include "polydyn/errors.hpp"
#include "polydyn/translate.hpp"

namespace polydyn {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kPolynomial:
      return "polynomial";
    case ModelKind::kBoolean:
      return "boolean";
    case ModelKind::kLogical:
      return "logical";
    case ModelKind::kProbabilistic:
      return "probabilistic";
  }
  return "?";
}

namespace {

// A comment-stripped, trimmed source line. column is the 1-based position of
// text[0] in the original line.
struct Line {
  std::size_t number;
  std::size_t column;
  std::string_view text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t lead = 0;
    while (lead < line.size() && is_space(line[lead])) ++lead;
    std::size_t trail = line.size();
    while (trail > lead && is_space(line[trail - 1])) --trail;
    if (trail > lead) lines.push_back({number, lead + 1, line.substr(lead, trail - lead)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// Whitespace-separated tokens with their columns.
struct Token {
  std::size_t column;
  std::string_view text;
};

std::vector<Token> tokenize(const Line& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.text.size()) {
    while (i < line.text.size() && is_space(line.text[i])) ++i;
    const std::size_t start = i;
    while (i < line.text.size() && !is_space(line.text[i])) ++i;
    if (i > start) out.push_back({line.column + start, line.text.substr(start, i - start)});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& what) {
  throw ParseError(line.number, column, what);
}

std::uint64_t parse_uint(const Line& line, std::size_t column, std::string_view s,
                         const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, column, "expected " + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

// "x12" -> 11; "f3" -> 2 with prefix 'f'.
std::uint32_t parse_indexed(const Line& line, std::size_t column, std::string_view s,
                            char prefix) {
  if (s.size() < 2 || s[0] != prefix) {
    fail(line, column,
         std::string("expected ") + prefix + "<i>, got '" + std::string(s) + "'");
  }
  const std::uint64_t idx = parse_uint(line, column + 1, s.substr(1), "index");
  if (idx == 0 || idx > (1u << 20)) {
    fail(line, column, "index out of range in '" + std::string(s) + "'");
  }
  return static_cast<std::uint32_t>(idx - 1);
}

// Largest x<i> index mentioned in an expression, as a count (0 if none).
std::uint32_t max_variable(std::string_view expr) {
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    if (expr[i] != 'x') continue;
    std::uint64_t v = 0;
    std::size_t j = i + 1;
    while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j])) &&
           v < (1u << 20)) {
      v = v * 10 + static_cast<std::uint64_t>(expr[j] - '0');
      ++j;
    }
    if (j > i + 1 && v <= (1u << 20)) best = std::max(best, static_cast<std::uint32_t>(v));
  }
  return best;
}

struct RawRule {
  Line line;
  std::uint32_t target;
  std::size_t expr_column;
  std::string_view expr;
  std::optional<Rational> probability;
};

Rational parse_probability(const Line& line, std::size_t column, std::string_view s) {
  const auto slash = s.find('/');
  const std::uint64_t num = parse_uint(line, column, s.substr(0, slash), "probability");
  std::uint64_t den = 1;
  if (slash != std::string_view::npos) {
    den = parse_uint(line, column + slash + 1, s.substr(slash + 1), "denominator");
    if (den == 0) fail(line, column + slash + 1, "zero denominator");
  }
  if (num > (1ull << 40) || den > (1ull << 40)) fail(line, column, "probability too large");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

RawRule parse_rule_line(const Line& line, bool allow_probability) {
  const auto eq = line.text.find('=');
  if (eq == std::string_view::npos) {
    fail(line, line.column, "expected 'f<i> = <expression>'");
  }
  std::string_view lhs = line.text.substr(0, eq);
  while (!lhs.empty() && is_space(lhs.back())) lhs.remove_suffix(1);
  const std::uint32_t target = parse_indexed(line, line.column, lhs, 'f');

  std::size_t expr_start = eq + 1;
  std::string_view expr = line.text.substr(expr_start);
  std::optional<Rational> prob;
  if (const auto at = expr.rfind('@'); at != std::string_view::npos) {
    if (!allow_probability) {
      fail(line, line.column + expr_start + at,
           "probabilities are only allowed in probabilistic models");
    }
    std::string_view ptext = expr.substr(at + 1);
    std::size_t pcol = line.column + expr_start + at + 1;
    while (!ptext.empty() && is_space(ptext.front())) {
      ptext.remove_prefix(1);
      ++pcol;
    }
    while (!ptext.empty() && is_space(ptext.back())) ptext.remove_suffix(1);
    if (ptext.empty()) fail(line, pcol, "missing probability after '@'");
    prob = parse_probability(line, pcol, ptext);
    expr = expr.substr(0, at);
  }
  while (!expr.empty() && is_space(expr.front())) {
    expr.remove_prefix(1);
    ++expr_start;
  }
  while (!expr.empty() && is_space(expr.back())) expr.remove_suffix(1);
  if (expr.empty()) fail(line, line.column + eq + 1, "empty expression");
  return {line, target, line.column + expr_start, expr, prob};
}

// Re-raises an expression-level error at its position in the file.
template <typename Fn>
auto at_line(const RawRule& rule, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const auto sep = msg.find(": ");
    throw ParseError(rule.line.number, rule.expr_column + e.column() - 1,
                     sep == std::string::npos ? msg : msg.substr(sep + 2));
  }
}

std::vector<std::uint32_t> parse_schedule(const Line& line, std::size_t column,
                                          std::string_view text) {
  std::vector<std::uint32_t> order;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t end = text.find(',', i);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(i, end - i);
    std::size_t col = column + i;
    while (!item.empty() && is_space(item.front())) {
      item.remove_prefix(1);
      ++col;
    }
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    const std::uint64_t v = parse_uint(line, col, item, "schedule index");
    if (v == 0 || v > (1u << 20)) fail(line, col, "schedule index out of range");
    order.push_back(static_cast<std::uint32_t>(v - 1));
    if (end == text.size()) break;
    i = end + 1;
  }
  return order;
}

struct LogicalParse {
  std::map<std::uint32_t, std::uint32_t> max_levels;
  std::map<std::uint32_t, std::pair<Line, LogicalTable>> tables;
};

void parse_logical_line(const Line& line, LogicalParse& lp,
                        std::optional<std::uint32_t>& current) {
  const auto tokens = tokenize(line);
  if (tokens[0].text == "VAR") {
    if (tokens.size() != 4 || tokens[2].text != "MAX") {
      fail(line, line.column, "expected 'VAR x<i> MAX <m>'");
    }
    const std::uint32_t v = parse_indexed(line, tokens[1].column, tokens[1].text, 'x');
    const std::uint64_t m = parse_uint(line, tokens[3].column, tokens[3].text, "maximum level");
    if (m == 0 || m > 1000) fail(line, tokens[3].column, "MAX must be between 1 and 1000");
    if (!lp.max_levels.emplace(v, static_cast<std::uint32_t>(m)).second) {
      fail(line, tokens[1].column, "x" + std::to_string(v + 1) + " declared twice");
    }
    current.reset();
    return;
  }
  if (tokens[0].text == "TABLE") {
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos || tokens.size() < 3) {
      fail(line, line.column, "expected 'TABLE x<i> : <regulators>'");
    }
    std::string_view target = tokens[1].text;
    if (!target.empty() && target.back() == ':') target.remove_suffix(1);
    const std::uint32_t v = parse_indexed(line, tokens[1].column, target, 'x');
    LogicalTable table;
    std::string_view regs = line.text.substr(colon + 1);
    std::size_t col = line.column + colon + 1;
    std::size_t i = 0;
    while (i < regs.size()) {
      while (i < regs.size() && (is_space(regs[i]) || regs[i] == ',')) ++i;
      const std::size_t start = i;
      while (i < regs.size() && !is_space(regs[i]) && regs[i] != ',') ++i;
      if (i > start) {
        table.regulators.push_back(
            parse_indexed(line, col + start, regs.substr(start, i - start), 'x'));
      }
    }
    if (lp.tables.count(v) != 0) {
      fail(line, tokens[1].column, "second TABLE for x" + std::to_string(v + 1));
    }
    lp.tables.emplace(v, std::make_pair(line, std::move(table)));
    current = v;
    return;
  }
  const auto arrow = line.text.find("->");
  if (arrow == std::string_view::npos) {
    fail(line, line.column, "expected VAR, TABLE, or '<inputs> -> <target>'");
  }
  if (!current) fail(line, line.column, "table row outside a TABLE block");
  LogicalTable& table = lp.tables.at(*current).second;
  std::vector<std::uint32_t> inputs;
  std::string_view lhs = line.text.substr(0, arrow);
  std::size_t i = 0;
  while (i < lhs.size()) {
    while (i < lhs.size() && (is_space(lhs[i]) || lhs[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < lhs.size() && !is_space(lhs[i]) && lhs[i] != ',') ++i;
    if (i > start) {
      const std::uint64_t v = parse_uint(line, line.column + start,
                                         lhs.substr(start, i - start), "input value");
      if (v > 1000) fail(line, line.column + start, "input value out of range");
      inputs.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (inputs.size() != table.regulators.size()) {
    fail(line, line.column,
         "row has " + std::to_string(inputs.size()) + " inputs, table has " +
             std::to_string(table.regulators.size()) + " regulators");
  }
  std::string_view rhs = line.text.substr(arrow + 2);
  std::size_t rcol = line.column + arrow + 2;
  while (!rhs.empty() && is_space(rhs.front())) {
    rhs.remove_prefix(1);
    ++rcol;
  }
  const std::uint64_t target = parse_uint(line, rcol, rhs, "target value");
  if (target > 1000) fail(line, rcol, "target value out of range");
  if (!table.rows.emplace(std::move(inputs), static_cast<std::uint32_t>(target)).second) {
    fail(line, line.column, "duplicate row");
  }
}

LogicalModel finish_logical(LogicalParse& lp, const Line& states_line,
                            std::size_t states_column, std::uint32_t states,
                            std::uint32_t& nvars) {
  if (lp.max_levels.empty()) fail(states_line, 1, "logical model declares no VAR");
  nvars = lp.max_levels.rbegin()->first + 1;
  LogicalModel model;
  std::uint32_t top = 1;
  for (std::uint32_t v = 0; v < nvars; ++v) {
    auto it = lp.max_levels.find(v);
    if (it == lp.max_levels.end()) {
      fail(states_line, 1, "x" + std::to_string(v + 1) + " is not declared with VAR");
    }
    model.max_levels.push_back(it->second);
    top = std::max(top, it->second);
  }
  for (const auto& [v, entry] : lp.tables) {
    if (v >= nvars) {
      fail(entry.first, entry.first.column,
           "TABLE for undeclared variable x" + std::to_string(v + 1));
    }
    for (std::uint32_t r : entry.second.regulators) {
      if (r >= nvars) {
        fail(entry.first, entry.first.column,
             "regulator x" + std::to_string(r + 1) + " is not declared");
      }
    }
  }
  for (std::uint32_t v = 0; v < nvars; ++v) {
    auto it = lp.tables.find(v);
    if (it == lp.tables.end()) {
      fail(states_line, 1, "no TABLE for x" + std::to_string(v + 1));
    }
    model.tables.push_back(it->second.second);
  }
  const std::uint32_t q = next_prime(top + 1);
  if (states != q) {
    fail(states_line, states_column,
         "STATES " + std::to_string(states) + " does not match the model: "
         "maximum level " + std::to_string(top) + " needs STATES " + std::to_string(q));
  }
  return model;
}

}  // namespace

ModelDocument parse_model(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty model file");

  const Line& kind_line = lines[0];
  const auto kind_tokens = tokenize(kind_line);
  if (kind_tokens[0].text != "KIND" || kind_tokens.size() != 2) {
    fail(kind_line, kind_line.column, "first line must be 'KIND <kind>'");
  }
  ModelKind kind;
  const std::string_view kname = kind_tokens[1].text;
  if (kname == "polynomial") {
    kind = ModelKind::kPolynomial;
  } else if (kname == "boolean") {
    kind = ModelKind::kBoolean;
  } else if (kname == "logical") {
    kind = ModelKind::kLogical;
  } else if (kname == "probabilistic") {
    kind = ModelKind::kProbabilistic;
  } else {
    fail(kind_line, kind_tokens[1].column, "unknown kind '" + std::string(kname) + "'");
  }

  if (lines.size() < 2) fail(kind_line, kind_line.column, "missing STATES line");
  const Line& states_line = lines[1];
  const auto states_tokens = tokenize(states_line);
  if (states_tokens[0].text != "STATES" || states_tokens.size() != 2) {
    fail(states_line, states_line.column, "second line must be 'STATES <p>'");
  }
  const std::uint64_t p64 = parse_uint(states_line, states_tokens[1].column,
                                       states_tokens[1].text, "number of states");
  if (p64 > 65521 || !is_prime(p64)) {
    fail(states_line, states_tokens[1].column,
         std::string(states_tokens[1].text) + " is not prime");
  }
  const auto p = static_cast<std::uint32_t>(p64);
  if (kind == ModelKind::kBoolean && p != 2) {
    fail(states_line, states_tokens[1].column, "boolean models need STATES 2");
  }

  ModelDocument doc{kind, p, 0, std::nullopt, PolynomialRules{}};
  std::optional<std::pair<Line, std::vector<std::uint32_t>>> schedule;
  std::vector<RawRule> raw;
  LogicalParse lp;
  std::optional<std::uint32_t> current_table;

  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto tokens = tokenize(line);
    if (tokens[0].text == "SCHEDULE") {
      if (schedule) fail(line, line.column, "second SCHEDULE line");
      if (tokens.size() < 2) fail(line, line.column, "empty SCHEDULE");
      const std::size_t off = tokens[1].column - line.column;
      schedule.emplace(line, parse_schedule(line, tokens[1].column, line.text.substr(off)));
      continue;
    }
    if (tokens[0].text == "KIND" || tokens[0].text == "STATES") {
      fail(line, line.column, std::string(tokens[0].text) + " given twice");
    }
    if (kind == ModelKind::kLogical) {
      parse_logical_line(line, lp, current_table);
    } else {
      raw.push_back(parse_rule_line(line, kind == ModelKind::kProbabilistic));
    }
  }

  if (kind == ModelKind::kLogical) {
    doc.rules = finish_logical(lp, states_line, states_tokens[1].column, p, doc.nvars);
  } else {
    if (raw.empty()) fail(states_line, states_line.column, "model has no rules");
    std::uint32_t n = 0;
    for (const RawRule& r : raw) {
      n = std::max({n, r.target + 1, max_variable(r.expr)});
    }
    doc.nvars = n;
    std::vector<std::vector<const RawRule*>> by_target(n);
    for (const RawRule& r : raw) {
      if (kind != ModelKind::kProbabilistic && !by_target[r.target].empty()) {
        fail(r.line, r.line.column, "duplicate rule for f" + std::to_string(r.target + 1));
      }
      by_target[r.target].push_back(&r);
    }
    // A variable that only appears as an input keeps its value: f_i = x_i.
    std::vector<std::string> held_names;
    std::vector<RawRule> held;
    held_names.reserve(n);
    held.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!by_target[i].empty()) continue;
      held_names.push_back("x" + std::to_string(i + 1));
      held.push_back({raw.back().line, i, 1, held_names.back(), std::nullopt});
      by_target[i].push_back(&held.back());
    }
    const PrimeField field(p);
    if (kind == ModelKind::kPolynomial) {
      PolynomialRules rules;
      for (std::uint32_t i = 0; i < n; ++i) {
        const RawRule& r = *by_target[i][0];
        rules.push_back(at_line(r, [&] { return parse_polynomial(r.expr, field, n); }));
      }
      doc.rules = std::move(rules);
    } else if (kind == ModelKind::kBoolean) {
      BooleanRules rules;
      for (std::uint32_t i = 0; i < n; ++i) {
        const RawRule& r = *by_target[i][0];
        rules.push_back(at_line(r, [&] { return parse_boolean(r.expr, n); }));
      }
      doc.rules = std::move(rules);
    } else {
      ProbabilisticRules rules(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        const bool first_has = by_target[i][0]->probability.has_value();
        for (const RawRule* r : by_target[i]) {
          if (r->probability.has_value() != first_has) {
            fail(r->line, r->line.column,
                 "f" + std::to_string(i + 1) +
                     ": give a probability for every rule or for none");
          }
          rules[i].push_back({at_line(*r, [&] { return parse_polynomial(r->expr, field, n); }),
                              r->probability});
        }
      }
      doc.rules = std::move(rules);
    }
  }

  if (schedule) {
    const auto& [line, order] = *schedule;
    std::vector<bool> seen(doc.nvars, false);
    bool ok = order.size() == doc.nvars;
    for (std::uint32_t v : order) {
      if (v >= doc.nvars || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
    }
    if (!ok) {
      fail(line, line.column,
           "SCHEDULE must be a permutation of 1.." + std::to_string(doc.nvars));
    }
    doc.schedule = order;
  }
  return doc;
}

std::string print_model(const ModelDocument& doc) {
  std::ostringstream os;
  os << "KIND " << to_string(doc.kind) << '\n';
  os << "STATES " << doc.states << '\n';
  if (doc.schedule) {
    os << "SCHEDULE ";
    for (std::size_t i = 0; i < doc.schedule->size(); ++i) {
      if (i != 0) os << ',';
      os << (*doc.schedule)[i] + 1;
    }
    os << '\n';
  }
  if (const auto* rules = std::get_if<PolynomialRules>(&doc.rules)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      os << 'f' << i + 1 << " = " << (*rules)[i].to_string() << '\n';
    }
  } else if (const auto* rules = std::get_if<BooleanRules>(&doc.rules)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      os << 'f' << i + 1 << " = " << (*rules)[i].to_string() << '\n';
    }
  } else if (const auto* rules = std::get_if<ProbabilisticRules>(&doc.rules)) {
    for (std::size_t i = 0; i < rules->size(); ++i) {
      for (const ProbabilisticRule& r : (*rules)[i]) {
        os << 'f' << i + 1 << " = " << r.function.to_string();
        if (r.probability) {
          os << " @ " << r.probability->numerator() << '/' << r.probability->denominator();
        }
        os << '\n';
      }
    }
  } else {
    const auto& model = std::get<LogicalModel>(doc.rules);
    for (std::uint32_t v = 0; v < model.size(); ++v) {
      os << "VAR x" << v + 1 << " MAX " << model.max_levels[v] << '\n';
    }
    for (std::uint32_t v = 0; v < model.size(); ++v) {
      const LogicalTable& t = model.tables[v];
      os << "TABLE x" << v + 1 << " :";
      for (std::size_t k = 0; k < t.regulators.size(); ++k) {
        os << (k == 0 ? " " : ", ") << 'x' << t.regulators[k] + 1;
      }
      os << '\n';
      for (const auto& [inputs, target] : t.rows) {
        for (std::uint32_t in : inputs) os << in << ' ';
        os << "-> " << target << '\n';
      }
    }
  }
  return os.str();
}

TranslatedSystem document_to_system(const ModelDocument& doc) {
  TranslatedSystem out{PDS(PrimeField(doc.states), {}), std::nullopt, std::nullopt};
  if (doc.schedule) out.schedule = UpdateSchedule::sequential(*doc.schedule);
  const PrimeField field(doc.states);
  switch (doc.kind) {
    case ModelKind::kPolynomial:
      out.system = PDS(field, std::get<PolynomialRules>(doc.rules));
      break;
    case ModelKind::kBoolean: {
      std::vector<Polynomial> fs;
      for (const BooleanExpression& e : std::get<BooleanRules>(doc.rules)) {
        fs.push_back(boolean_to_polynomial(e, doc.nvars));
      }
      out.system = PDS(field, std::move(fs));
      break;
    }
    case ModelKind::kLogical: {
      LogicalTranslation t = logical_to_pds(std::get<LogicalModel>(doc.rules));
      out.system = std::move(t.pds);
      out.extension = std::move(t.extension);
      break;
    }
    case ModelKind::kProbabilistic: {
      const auto& rules = std::get<ProbabilisticRules>(doc.rules);
      std::vector<std::vector<Polynomial>> choices(rules.size());
      for (std::size_t i = 0; i < rules.size(); ++i) {
        for (const ProbabilisticRule& r : rules[i]) choices[i].push_back(r.function);
      }
      ProbabilisticPDS pds = ProbabilisticPDS::uniform(field, std::move(choices));
      for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!rules[i].front().probability) continue;
        for (std::size_t j = 0; j < rules[i].size(); ++j) {
          pds.probabilities[i][j] = *rules[i][j].probability;
        }
      }
      out.system = std::move(pds);
      break;
    }
  }
  return out;
}

}  // namespace polydyn
