// Copyright 2026 The bhatt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bhatt/problem.hpp"
#include "oracles.hpp"

using bhatt::emit_json;
using bhatt::emit_text;
using bhatt::format_ideal;
using bhatt::format_monomial;
using bhatt::Monomial;
using bhatt::MonomialIdeal;
using bhatt::parse_problem;
using bhatt::parse_problem_json;
using bhatt::parse_problem_text;
using bhatt::ParseError;
using bhatt::ProblemSpec;
using bhatt::Witnesses;
using oracle::ideal;
using oracle::mono;

namespace {
constexpr const char* kStaircaseText = R"(# comment line
ring x y
I: x y
J: x^3 x^2*y^4 x*y^5 y^7

witness joint: y@I x^3@J
witness reduction: x^3@J y^7@J
witness complete: (x,x^3) (y,y^7)
)";
}  // namespace

TEST_CASE("text parsing of a full problem") {
  auto spec = parse_problem_text(kStaircaseText);
  CHECK(spec.vars == std::vector<std::string>{"x", "y"});
  CHECK(spec.I == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(spec.J == ideal(2, {{3, 0}, {2, 4}, {1, 5}, {0, 7}}));
  REQUIRE(spec.witnesses.joint.has_value());
  CHECK(spec.witnesses.joint->first == mono({0, 1}));
  CHECK(spec.witnesses.joint->second == mono({3, 0}));
  REQUIRE(spec.witnesses.reduction_J.has_value());
  CHECK(*spec.witnesses.reduction_J ==
        std::vector<Monomial>{mono({3, 0}), mono({0, 7})});
  CHECK_FALSE(spec.witnesses.reduction_I.has_value());
  REQUIRE(spec.witnesses.complete.has_value());
  CHECK(spec.witnesses.complete->size() == 2);
  CHECK((*spec.witnesses.complete)[0].second == mono({3, 0}));
}

TEST_CASE("J defaults to the unit ideal") {
  auto spec = parse_problem_text("ring x y\nI: x^2 y\n");
  CHECK(spec.J.is_unit());
}

TEST_CASE("decomp witness parsing") {
  auto spec = parse_problem_text(
      "ring x y z\nI: x^2 x*y y^2 z\nJ: x y^3 z\n"
      "witness decomp: (1,1) = x@(1,0) z@(1,0) y^2@(0,1)\n");
  REQUIRE(spec.witnesses.decomp.has_value());
  CHECK(spec.witnesses.decomp->target == std::pair{1, 1});
  REQUIRE(spec.witnesses.decomp->terms.size() == 3);
  CHECK(spec.witnesses.decomp->terms[2].m == mono({0, 2, 0}));
  CHECK(spec.witnesses.decomp->terms[2].a == 0);
  CHECK(spec.witnesses.decomp->terms[2].b == 1);
}

TEST_CASE("the two input formats agree") {
  auto text = parse_problem_text(kStaircaseText);
  auto structured = parse_problem_json(R"({
    "vars": ["x", "y"],
    "I": [[1,0],[0,1]],
    "J": [[3,0],[2,4],[1,5],[0,7]],
    "witnesses": {
      "reduction_J": [[3,0],[0,7]],
      "joint": {"I": [0,1], "J": [3,0]},
      "complete": [[[1,0],[3,0]], [[0,1],[0,7]]]
    }
  })");
  CHECK(text == structured);
  // Auto-detection picks the right parser for both.
  CHECK(parse_problem(kStaircaseText) == text);
  CHECK(parse_problem(emit_json(text)) == text);
}

TEST_CASE("parse errors carry line and column") {
  auto check_error = [](const char* input, int line, const char* fragment) {
    try {
      parse_problem_text(input);
      FAIL("expected a parse error for: ", input);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      INFO("message: ", e.what());
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  check_error("ring x y\nI: x^-1\n", 2, "negative exponent");
  check_error("ring x y\nI: w^2\n", 2, "unknown variable 'w'");
  check_error("I: x\n", 1, "'ring' line must come first");
  check_error("ring x y\n", 2, "missing 'I:'");
  check_error("ring x x\nI: x\n", 1, "duplicate variable");
  check_error("ring x y\nI: x\nI: y\n", 3, "duplicate 'I:'");
  check_error("ring x y\nI: x\nwitness joint: x@I\n", 3, "exactly two");
  check_error("ring x y\nI: x\nwitness reduction: x@I y@J\n", 3, "mixed");
  check_error("ring x y\nI: x\nwitness decomp: x@(1,0)\n", 3, "(a,b)");
  check_error("ring x y\nI: x^\n", 2, "malformed exponent");
}

TEST_CASE("structured-format errors are descriptive") {
  CHECK_THROWS_AS(parse_problem_json("{\"vars\": []}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{\"vars\": [\"x\"]}"), ParseError);
  CHECK_THROWS_AS(parse_problem_json("{\"vars\": [\"x\"], \"I\": [[-1]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem_json("{\"vars\": [\"x\"], \"I\": [[1,2]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_problem(""), ParseError);
}

TEST_CASE("monomial and ideal formatting") {
  std::vector<std::string> vars{"x", "y"};
  CHECK(format_monomial(mono({2, 4}), vars) == "x^2*y^4");
  CHECK(format_monomial(mono({1, 0}), vars) == "x");
  CHECK(format_monomial(mono({0, 0}), vars) == "1");
  CHECK(format_ideal(ideal(2, {{3, 0}, {0, 7}}), vars) == "y^7, x^3");
  CHECK(format_ideal(MonomialIdeal::zero(2), vars) == "0");
}

TEST_CASE("round-trip through both emitters on fixtures") {
  auto spec = parse_problem_text(kStaircaseText);
  CHECK(parse_problem_text(emit_text(spec)) == spec);
  CHECK(parse_problem_json(emit_json(spec)) == spec);

  auto d3 = parse_problem_text(
      "ring x y z\nI: x^2 x*y y^2 z\nJ: x y^3 z\n"
      "witness reduction: x^2 y^2 z\n"
      "witness decomp: (1,1) = x@(1,0) z@(1,0) y^2@(0,1)\n");
  CHECK(parse_problem_text(emit_text(d3)) == d3);
  CHECK(parse_problem_json(emit_json(d3)) == d3);
}

TEST_CASE("round-trip on random problems") {
  std::mt19937 rng(909090);
  const std::vector<std::string> names{"x", "y", "z"};
  std::uniform_int_distribution<int> nvars(1, 3), exp(0, 5), count(1, 4),
      coin(0, 1);
  auto random_monomial = [&](int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (auto& v : e) v = exp(rng);
    return Monomial(std::move(e));
  };
  for (int iter = 0; iter < 100; ++iter) {
    int n = nvars(rng);
    std::vector<std::string> vars(names.begin(), names.begin() + n);
    std::vector<Monomial> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(random_monomial(n));
    MonomialIdeal I(n, gens);
    MonomialIdeal J = coin(rng) ? MonomialIdeal::unit(n)
                                : MonomialIdeal(n, {random_monomial(n)});
    Witnesses w;
    if (coin(rng)) w.reduction_I = {random_monomial(n), random_monomial(n)};
    if (coin(rng)) w.reduction_J = {random_monomial(n)};
    if (coin(rng)) w.joint = {random_monomial(n), random_monomial(n)};
    if (coin(rng))
      w.complete = {{std::pair{random_monomial(n), random_monomial(n)}}};
    if (coin(rng)) {
      Witnesses::Decomp d;
      d.target = {1 + coin(rng), 1};
      d.terms.push_back({random_monomial(n), coin(rng), 1});
      w.decomp = d;
    }
    ProblemSpec spec{vars, I, J, w};
    CAPTURE(emit_text(spec));
    CHECK(parse_problem_text(emit_text(spec)) == spec);
    CHECK(parse_problem_json(emit_json(spec)) == spec);
  }
}
