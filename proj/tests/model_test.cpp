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

#include <random>

#include "oracles.hpp"
#include "polydyn/errors.hpp"
#include "polydyn/model.hpp"

namespace polydyn {
namespace {

using testing::all_points;
using testing::naive_eval;

Polynomial P(std::string_view text, std::uint32_t p, std::uint32_t n) {
  return parse_polynomial(text, PrimeField(p), n);
}

PDS three_gene() {
  return PDS(PrimeField(2), {P("x1*x2*x3 + x1*x2 + x2*x3 + x2", 2, 3),
                             P("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2", 2, 3),
                             P("x1*x2*x3 + x1*x3 + x2*x3 + x1 + x2", 2, 3)});
}

std::vector<std::uint32_t> naive_apply(const PDS& f, const std::vector<std::uint32_t>& x) {
  std::vector<std::uint32_t> y;
  for (const auto& g : f.functions()) y.push_back(naive_eval(g, x));
  return y;
}

TEST(Step, Examples) {
  const PDS f = three_gene();
  EXPECT_EQ(step(f, State{0, 1, 0}), (State{1, 1, 1}));
  EXPECT_EQ(step(f, State{1, 1, 1}), (State{0, 1, 1}));
  EXPECT_EQ(step(f, State{0, 1, 1}), (State{0, 1, 0}));
  EXPECT_EQ(step(f, State{0, 0, 0}), (State{0, 0, 0}));
  const PDS id = PDS::identity(PrimeField(3), 2);
  for (const auto& x : all_points(3, 2)) EXPECT_EQ(step(id, State(x)), State(x));
  EXPECT_THROW(step(f, State{0, 1}), StructuralError);
}

TEST(Validate, ReportsShapeProblems) {
  EXPECT_TRUE(validate(three_gene()).empty());
  const PDS wrong_arity(PrimeField(2), {P("x1", 2, 2), P("x2", 2, 2), P("x1", 2, 2)});
  const auto problems = validate(wrong_arity);
  ASSERT_EQ(problems.size(), 3u);
  EXPECT_NE(problems[0].find("f1 has 2 variables, system has 3 coordinates"), std::string::npos);
  EXPECT_THROW(require_valid(wrong_arity), StructuralError);
  EXPECT_THROW(step(wrong_arity, State{0, 0, 0}), StructuralError);
  const PDS wrong_field(PrimeField(2), {P("x1", 3, 1)});
  EXPECT_EQ(validate(wrong_field).size(), 1u);
}

TEST(Validate, ProbabilitiesMustSumToOne) {
  ProbabilisticPDS f{PrimeField(2),
                     {{P("x1", 2, 1), P("x1 + 1", 2, 1)}},
                     {{Rational(1, 2), Rational(2, 5)}}};
  const auto problems = validate(f);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("probabilities sum to 9/10 (0.9)"), std::string::npos);
  f.probabilities[0][1] = Rational(1, 2);
  EXPECT_TRUE(validate(f).empty());
  f.probabilities[0].pop_back();
  EXPECT_EQ(validate(f).size(), 1u);
}

TEST(ProbabilisticPDS, UniformAndSelections) {
  const auto f = ProbabilisticPDS::uniform(
      PrimeField(2), {{P("x2", 2, 2), P("x1", 2, 2), P("1", 2, 2)}, {P("x1", 2, 2)}});
  EXPECT_TRUE(validate(f).empty());
  EXPECT_EQ(f.probabilities[0][2], Rational(1, 3));
  EXPECT_EQ(f.selection_count(), 3u);
  const std::vector<std::uint32_t> pick{2, 0};
  EXPECT_EQ(f.selection(pick), PDS(PrimeField(2), {P("1", 2, 2), P("x1", 2, 2)}));
}

TEST(Schedule, TwoNodeSwapExample) {
  const PDS f(PrimeField(2), {P("x2", 2, 2), P("x1", 2, 2)});
  const PDS g = sequential_to_synchronous(f, UpdateSchedule::sequential({0, 1}));
  EXPECT_EQ(g, PDS(PrimeField(2), {P("x2", 2, 2), P("x2", 2, 2)}));
  const std::vector<std::uint32_t> order{0, 1};
  for (const auto& x : all_points(2, 2)) {
    EXPECT_EQ(naive_apply(g, x), testing::sequential_step(f, order, x));
  }
}

TEST(Schedule, IdentityAndSynchronousAreFixed) {
  const PDS id = PDS::identity(PrimeField(3), 3);
  EXPECT_EQ(sequential_to_synchronous(id, UpdateSchedule::sequential({2, 0, 1})), id);
  const PDS f = three_gene();
  EXPECT_EQ(sequential_to_synchronous(f, UpdateSchedule::synchronous()), f);
  EXPECT_THROW(sequential_to_synchronous(f, UpdateSchedule::sequential({0, 0, 1})),
               StructuralError);
  EXPECT_THROW(sequential_to_synchronous(f, UpdateSchedule::sequential({0, 1})),
               StructuralError);
}

TEST(Schedule, ThreeGeneKeepsItsSteadyState) {
  const PDS g = sequential_to_synchronous(three_gene(), UpdateSchedule::sequential({0, 1, 2}));
  std::vector<State> fixed;
  for (const auto& x : all_points(2, 3)) {
    if (naive_apply(g, x) == x) fixed.emplace_back(x);
  }
  EXPECT_EQ(fixed, (std::vector<State>{State{0, 0, 0}}));
}

TEST(Schedule, MatchesSequentialSimulation) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t p = t % 3 == 0 ? 3 : 2;
    const std::uint32_t n = testing::uniform(rng, 1, p == 2 ? 8 : 5);
    const PDS f = testing::random_pds(rng, PrimeField(p), n);
    const auto order = testing::random_permutation(rng, n);
    const PDS g = sequential_to_synchronous(f, UpdateSchedule::sequential(order));
    for (const auto& x : all_points(p, n)) {
      ASSERT_EQ(naive_apply(g, x), testing::sequential_step(f, order, x));
    }
  }
}

TEST(Iterate, ThreeGeneSecondIterate) {
  const PDS g = iterate(three_gene(), 2);
  EXPECT_EQ(g[0], P("x1*x2 + x2*x3", 2, 3));
  EXPECT_EQ(g[1], P("x1*x2*x3 + x1*x2 + x1*x3 + x1 + x2", 2, 3));
  EXPECT_EQ(g[2], P("x1*x2*x3 + x2", 2, 3));
  EXPECT_EQ(iterate(three_gene(), 1), three_gene());
  EXPECT_THROW(iterate(three_gene(), 0), std::invalid_argument);
  EXPECT_THROW(iterate(three_gene(), 2, 2), ResourceError);
}

TEST(Iterate, AdditiveInTheExponent) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t p = t % 2 == 0 ? 2 : 3;
    const std::uint32_t n = testing::uniform(rng, 1, 4);
    const PDS f = testing::random_pds(rng, PrimeField(p), n);
    const std::uint32_t a = testing::uniform(rng, 1, 3);
    const std::uint32_t b = testing::uniform(rng, 1, 3);
    const PDS fa = iterate(f, a);
    const PDS fb = iterate(f, b);
    const PDS fab = iterate(f, a + b);
    for (const auto& x : all_points(p, n)) {
      EXPECT_EQ(naive_apply(fab, x), naive_apply(fa, naive_apply(fb, x)));
      std::vector<std::uint32_t> y = x;
      for (std::uint32_t k = 0; k < a; ++k) y = naive_apply(f, y);
      EXPECT_EQ(naive_apply(fa, x), y);
    }
  }
}

}  // namespace
}  // namespace polydyn
