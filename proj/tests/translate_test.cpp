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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "polydyn/errors.hpp"
#include "polydyn/translate.hpp"

namespace polydyn {
namespace {

using testing::all_points;
using testing::naive_eval;

Polynomial P(std::string_view text, std::uint32_t p, std::uint32_t n) {
  return parse_polynomial(text, PrimeField(p), n);
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(POLYDYN_TEST_DATA) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

BooleanExpression random_expression(std::mt19937_64& rng, std::uint32_t n, int depth) {
  const auto pick = testing::uniform(rng, 0, depth <= 0 ? 1 : 5);
  switch (pick) {
    case 0:
      return BooleanExpression::variable(testing::uniform(rng, 0, n - 1));
    case 1:
      return testing::uniform(rng, 0, 5) == 0
                 ? BooleanExpression::constant(testing::uniform(rng, 0, 1) == 1)
                 : BooleanExpression::variable(testing::uniform(rng, 0, n - 1));
    case 2:
      return BooleanExpression::negation(random_expression(rng, n, depth - 1));
    default: {
      std::vector<BooleanExpression> ops;
      const auto k = testing::uniform(rng, 2, 3);
      for (std::uint32_t i = 0; i < k; ++i) ops.push_back(random_expression(rng, n, depth - 1));
      return pick == 3 ? BooleanExpression::conjunction(std::move(ops))
                       : BooleanExpression::disjunction(std::move(ops));
    }
  }
}

TEST(BooleanExpression, ParsesWithPrecedence) {
  const auto e = parse_boolean("(x1 & x2) | !x3", 3);
  ASSERT_EQ(e.kind(), BooleanExpression::Kind::kOr);
  ASSERT_EQ(e.operands().size(), 2u);
  EXPECT_EQ(e.operands()[0].kind(), BooleanExpression::Kind::kAnd);
  EXPECT_EQ(e.operands()[1].kind(), BooleanExpression::Kind::kNot);
  EXPECT_EQ(parse_boolean("x1 | x2 & x3", 3), parse_boolean("x1 | (x2 & x3)", 3));
  EXPECT_EQ(parse_boolean("~x1 * x2", 2), parse_boolean("!x1 & x2", 2));
  EXPECT_EQ(e.to_string(), "(x1 & x2) | !x3");
  EXPECT_EQ(e.arity(), 3u);
}

TEST(BooleanExpression, RejectsMalformedText) {
  EXPECT_THROW(parse_boolean("x1 + x2", 2), ParseError);
  EXPECT_THROW(parse_boolean("x1 &", 2), ParseError);
  EXPECT_THROW(parse_boolean("x3", 2), ParseError);
  EXPECT_THROW(parse_boolean("(x1", 2), ParseError);
  EXPECT_THROW(parse_boolean("2", 2), ParseError);
  try {
    parse_boolean("x1 + x2", 2);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
    EXPECT_NE(std::string(e.what()).find("use '|'"), std::string::npos);
  }
}

TEST(BooleanToPolynomial, Examples) {
  EXPECT_EQ(boolean_to_polynomial(parse_boolean("!x1", 1), 1), P("x1 + 1", 2, 1));
  EXPECT_EQ(boolean_to_polynomial(parse_boolean("x1 & x2", 2), 2), P("x1*x2", 2, 2));
  EXPECT_EQ(boolean_to_polynomial(parse_boolean("x1 | x2", 2), 2), P("x1 + x2 + x1*x2", 2, 2));
  const auto e = parse_boolean("(x1 | x2) & !x1", 2);
  const Polynomial g = boolean_to_polynomial(e, 2);
  EXPECT_EQ(g, P("x1*x2 + x2", 2, 2));
  for (const auto& x : all_points(2, 2)) EXPECT_EQ(naive_eval(g, x), e.evaluate(x) ? 1u : 0u);
}

TEST(BooleanToPolynomial, AgreesWithTruthTables) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t n = testing::uniform(rng, 1, 10);
    const auto e = random_expression(rng, n, 4);
    const Polynomial g = boolean_to_polynomial(e, n);
    for (const auto& x : all_points(2, n)) {
      ASSERT_EQ(naive_eval(g, x), e.evaluate(x) ? 1u : 0u) << e.to_string();
    }
    EXPECT_EQ(parse_boolean(e.to_string(), n), parse_boolean(parse_boolean(e.to_string(), n).to_string(), n));
  }
}

TEST(LogicalToPds, TableExampleExtendsByClamping) {
  const ModelDocument doc = parse_model(read_data("two_level.logical"));
  const auto& model = std::get<LogicalModel>(doc.rules);
  const LogicalTranslation t = logical_to_pds(model);
  EXPECT_EQ(t.pds.field().characteristic(), 3u);
  EXPECT_EQ(t.extension.field_size(), 3u);
  const std::uint32_t expected[3][3] = {{0, 1, 2}, {1, 2, 2}, {1, 2, 2}};
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      const std::vector<std::uint32_t> x{a, b};
      EXPECT_EQ(naive_eval(t.pds[1], x), expected[a][b]);
      EXPECT_EQ(naive_eval(t.pds[0], x), std::min(a, 1u));
    }
  }
  EXPECT_EQ(t.extension.extra_states(),
            (std::vector<State>{State{2, 0}, State{2, 1}, State{2, 2}}));
  EXPECT_TRUE(t.extension.is_extra(State{2, 1}));
  EXPECT_FALSE(t.extension.is_extra(State{1, 2}));
}

TEST(LogicalToPds, SmallCases) {
  LogicalModel boolean{{1, 1}, {{{1}, {{{0}, 1}, {{1}, 0}}}, {{0}, {{{0}, 0}, {{1}, 1}}}}};
  const auto b = logical_to_pds(boolean);
  EXPECT_EQ(b.pds.field().characteristic(), 2u);
  EXPECT_FALSE(b.extension.has_extension());
  EXPECT_TRUE(b.extension.extra_states().empty());
  EXPECT_EQ(b.pds[0], P("x2 + 1", 2, 2));
  EXPECT_EQ(b.pds[1], P("x1", 2, 2));

  LogicalModel identity{{2}, {{{0}, {{{0}, 0}, {{1}, 1}, {{2}, 2}}}}};
  const auto i = logical_to_pds(identity);
  EXPECT_EQ(i.pds.field().characteristic(), 3u);
  EXPECT_EQ(i.pds[0], P("x1", 3, 1));

  LogicalModel missing{{2}, {{{0}, {{{0}, 0}, {{1}, 1}}}}};
  EXPECT_THROW(logical_to_pds(missing), StructuralError);
}

TEST(LogicalToPds, InRangeStatesReproduceTables) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::uint32_t n = testing::uniform(rng, 1, 3);
    LogicalModel m;
    for (std::uint32_t v = 0; v < n; ++v) m.max_levels.push_back(testing::uniform(rng, 1, 4));
    for (std::uint32_t v = 0; v < n; ++v) {
      LogicalTable table;
      for (std::uint32_t r = 0; r < n; ++r) {
        if (testing::uniform(rng, 0, 1) == 1) table.regulators.push_back(r);
      }
      std::vector<std::vector<std::uint32_t>> inputs{{}};
      for (std::uint32_t r : table.regulators) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& prefix : inputs) {
          for (std::uint32_t a = 0; a <= m.max_levels[r]; ++a) {
            next.push_back(prefix);
            next.back().push_back(a);
          }
        }
        inputs = std::move(next);
      }
      for (const auto& in : inputs) table.rows[in] = testing::uniform(rng, 0, m.max_levels[v]);
      m.tables.push_back(std::move(table));
    }
    const auto tr = logical_to_pds(m);
    const std::uint32_t q = tr.pds.field().characteristic();
    EXPECT_EQ(q, next_prime(1 + *std::max_element(m.max_levels.begin(), m.max_levels.end())));
    for (const auto& x : all_points(q, n)) {
      const bool extra = tr.extension.is_extra(State(x));
      bool out_of_range = false;
      for (std::uint32_t v = 0; v < n; ++v) out_of_range = out_of_range || x[v] > m.max_levels[v];
      EXPECT_EQ(extra, out_of_range);
      for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<std::uint32_t> key;
        for (std::uint32_t r : m.tables[v].regulators) key.push_back(std::min(x[r], m.max_levels[r]));
        EXPECT_EQ(naive_eval(tr.pds[v], x), m.tables[v].rows.at(key));
      }
    }
  }
}

TEST(ParseModel, PolynomialDocument) {
  const auto doc = parse_model("KIND polynomial\nSTATES 2\nf1 = x1*x2+x2\n");
  EXPECT_EQ(doc.kind, ModelKind::kPolynomial);
  EXPECT_EQ(doc.nvars, 2u);
  const auto t = document_to_system(doc);
  const auto& f = std::get<PDS>(t.system);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], P("x1*x2 + x2", 2, 2));
  EXPECT_EQ(f[1], P("x2", 2, 2));  // input variable holds its value

  const auto swapped = parse_model("KIND polynomial\nSTATES 3\nf2 = x1\n");
  EXPECT_EQ(std::get<PolynomialRules>(swapped.rules),
            (PolynomialRules{P("x1", 3, 2), P("x1", 3, 2)}));
}

TEST(ParseModel, ErrorsCarryPositions) {
  try {
    parse_model("KIND polynomial\nSTATES 4\nf1 = x1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("4 is not prime"), std::string::npos);
  }
  try {
    parse_model("KIND boolean\nSTATES 2\n# comment\nf1 = x1 & & x2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 11u);
  }
  EXPECT_THROW(parse_model(""), ParseError);
  EXPECT_THROW(parse_model("KIND spline\nSTATES 2\n"), ParseError);
  EXPECT_THROW(parse_model("KIND boolean\nSTATES 3\nf1 = x1\n"), ParseError);
  EXPECT_THROW(parse_model("KIND polynomial\nSTATES 2\nf1 = x1\nf1 = x2\n"), ParseError);
  EXPECT_THROW(parse_model("KIND polynomial\nSTATES 2\nf1 = x1 @ 1/2\n"), ParseError);
  EXPECT_THROW(parse_model("KIND polynomial\nSTATES 2\nSCHEDULE 1,1\nf1 = x2\nf2 = x1\n"),
               ParseError);
  EXPECT_THROW(parse_model("KIND logical\nSTATES 2\nVAR x1 MAX 2\nTABLE x1 :\n-> 0\n"),
               ParseError);
}

TEST(ParseModel, BooleanDocumentMatchesPolynomials) {
  const auto doc = parse_model(read_data("three_gene.boolean"));
  const auto t = document_to_system(doc);
  const auto& f = std::get<PDS>(t.system);
  EXPECT_EQ(f[0], P("x1*x2*x3 + x1*x2 + x2*x3 + x2", 2, 3));
  EXPECT_EQ(f[1], P("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2", 2, 3));
  EXPECT_EQ(f[2], P("x1*x2*x3 + x1*x3 + x2*x3 + x1 + x2", 2, 3));
}

TEST(ParseModel, ProbabilisticDocuments) {
  const auto doc = parse_model(
      "KIND probabilistic\nSTATES 2\nf1 = x2\nf1 = x1*x2\nf2 = x1 @ 1/3\nf2 = 1 @ 2/3\n");
  const auto t = document_to_system(doc);
  const auto& f = std::get<ProbabilisticPDS>(t.system);
  ASSERT_EQ(f.choices[0].size(), 2u);
  EXPECT_EQ(f.probabilities[0], (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(f.probabilities[1], (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
  EXPECT_THROW(parse_model("KIND probabilistic\nSTATES 2\nf1 = x1 @ 1/2\nf1 = 1\n"), ParseError);
}

TEST(ParseModel, ScheduleIsZeroBased) {
  const auto doc = parse_model("KIND polynomial\nSTATES 3\nSCHEDULE 2,1\nf1 = x2\nf2 = 2*x1\n");
  ASSERT_TRUE(doc.schedule.has_value());
  EXPECT_EQ(*doc.schedule, (std::vector<std::uint32_t>{1, 0}));
  const auto t = document_to_system(doc);
  ASSERT_TRUE(t.schedule.has_value());
  EXPECT_EQ(t.schedule->kind(), UpdateSchedule::Kind::kSequential);
}

TEST(ParseModel, PrintParseIsIdentity) {
  const std::vector<std::string> texts{
      read_data("two_level.logical"),
      read_data("three_gene.boolean"),
      read_data("three_gene.pds"),
      "KIND probabilistic\nSTATES 3\nSCHEDULE 2,1\nf1 = x2\nf1 = 2*x1*x2 @ 1/4\n"
      "f1 = 1 @ 1/4\nf2 = x1\n",
  };
  for (const auto& text : texts) {
    std::string fixed = text;
    // The three-candidate coordinate needs explicit probabilities throughout.
    if (fixed.find("f1 = x2\nf1 = 2") != std::string::npos) {
      fixed.replace(fixed.find("f1 = x2\n"), 8, "f1 = x2 @ 1/2\n");
      fixed.replace(fixed.find("f2 = x1\n"), 8, "f2 = x1 @ 1/1\n");
    }
    const ModelDocument doc = parse_model(fixed);
    const std::string printed = print_model(doc);
    EXPECT_EQ(parse_model(printed), doc) << printed;
    EXPECT_EQ(print_model(parse_model(printed)), printed);
  }
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const std::uint32_t n = testing::uniform(rng, 1, 6);
    ModelDocument doc{ModelKind::kBoolean, 2, n, std::nullopt, BooleanRules{}};
    auto& rules = std::get<BooleanRules>(doc.rules);
    for (std::uint32_t i = 0; i < n; ++i) rules.push_back(random_expression(rng, n, 3));
    const ModelDocument reparsed = parse_model(print_model(doc));
    EXPECT_EQ(print_model(reparsed), print_model(doc));
    EXPECT_EQ(document_to_system(reparsed).system.index(), 0u);
  }
}

}  // namespace
}  // namespace polydyn
