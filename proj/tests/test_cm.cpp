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

#include "bhatt/cm.hpp"
#include "oracles.hpp"

using bhatt::CmAnalysis;
using bhatt::CMWitnesses;
using bhatt::Integer;
using bhatt::MonomialIdeal;
using bhatt::rr_defect;
using bhatt::Window;
using oracle::ideal;
using oracle::mono;

namespace {
const MonomialIdeal m2 = ideal(2, {{1, 0}, {0, 1}});
const MonomialIdeal fix66 = ideal(2, {{3, 0}, {2, 4}, {1, 5}, {0, 7}});
const MonomialIdeal jac3 = ideal(2, {{2, 0}, {0, 1}});

MonomialIdeal jacobian(int n) { return ideal(2, {{n - 1, 0}, {0, 1}}); }
}  // namespace

TEST_CASE("difference table vanishes for the maximal ideal pair") {
  CmAnalysis an(m2, m2);
  auto table = an.difference_table({0, 4, 0, 4});
  for (const auto& row : table.values)
    for (const auto& v : row) CHECK(v == 0);
}

TEST_CASE("difference table of the staircase pair") {
  CmAnalysis an(m2, fix66);
  CHECK(an.difference(0, 0) == 1);
  CHECK(an.difference(1, 1) == 0);
  // The polynomial overshoots the pure m-power row by its constant term.
  for (int r = 0; r <= 4; ++r) CHECK(an.difference(r, 0) == 1);
  for (int s = 1; s <= 4; ++s) CHECK(an.difference(0, s) == 0);
  CHECK_THROWS_AS(an.difference_table({0, 2, 3, 1}), std::invalid_argument);
}

TEST_CASE("indirect h2 lengths") {
  CmAnalysis an(m2, fix66);
  CHECK(an.h2_length(0, 0) == 1);
  CHECK(an.h2_length(1, 1) == 0);
  CHECK(an.e00_identity_check());

  CmAnalysis mm(m2, m2);
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) CHECK(mm.h2_length(r, s) == 0);
  CHECK(mm.e00_identity_check());

  CmAnalysis aj(m2, jac3);
  CHECK(aj.h2_length(0, 0) == 0);
  CHECK(aj.e00_identity_check());

  CmAnalysis dim1(ideal(1, {{2}}), ideal(1, {{3}}));
  CHECK_THROWS_AS(dim1.h2_length(0, 0), std::domain_error);
}

TEST_CASE("h2 lengths decompose as difference plus defect per cell") {
  CmAnalysis an(m2, fix66);
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) {
      auto d = rr_defect(m2, fix66, r, s);
      REQUIRE(d.certified);
      CHECK(an.h2_length(r, s) == an.difference(r, s) + d.value);
    }
}

TEST_CASE("diagonal monotonicity of h2 lengths") {
  CmAnalysis an(m2, fix66);
  auto res = an.diagonal_monotonicity({0, 4, 0, 4});
  CHECK(res.holds);
  CHECK_FALSE(res.first_violation.has_value());

  CmAnalysis mm(m2, m2);
  CHECK(mm.diagonal_monotonicity({0, 3, 0, 3}).holds);

  CmAnalysis aj(m2, jac3);
  CHECK(aj.diagonal_monotonicity({0, 3, 0, 3}).holds);
}

TEST_CASE("coefficient inequality audit") {
  auto audit = CmAnalysis(m2, fix66).inequality_audit();
  CHECK(audit.len_I == 1);
  CHECK(audit.len_J == 16);
  CHECK(audit.e10 == 1);
  CHECK(audit.e01 == 15);

  auto self_audit = CmAnalysis(m2, m2).inequality_audit();
  CHECK(self_audit.len_I == 1);
  CHECK(self_audit.e10 == 1);

  auto d1 = CmAnalysis(ideal(1, {{2}}), ideal(1, {{3}})).inequality_audit();
  CHECK(d1.dim == 1);
  CHECK(d1.len_I == 2);
  CHECK(d1.e10 + d1.e00 == 2);

  auto m3 = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(CmAnalysis(m3, m3).inequality_audit(), std::domain_error);
}

TEST_CASE("e11 identity and bound") {
  CHECK(CmAnalysis(m2, jac3).e1_mixed_identity_check());
  CHECK(CmAnalysis(m2, m2).e1_mixed_identity_check());
  CHECK(CmAnalysis(m2, fix66).e1_mixed_identity_check());
}

TEST_CASE("Cohen-Macaulay verdict for the Jacobian pairs") {
  for (int n : {3, 4, 5}) {
    CmAnalysis an(m2, jacobian(n));
    CMWitnesses w;
    w.joint = {mono({1, 0}), mono({0, 1})};
    w.reduction_I = {mono({1, 0}), mono({0, 1})};
    w.reduction_J = {mono({n - 1, 0}), mono({0, 1})};
    auto report = an.jr_criterion_report({0, 4, 0, 4}, &w);
    CHECK(report.cm);
    CHECK(report.cond1);
    CHECK(report.cond1_prime);
    CHECK(report.cond2);
    CHECK(report.e00 == 0);
    CHECK(report.len_J == n - 1);
    REQUIRE(report.cond3.has_value());
    CHECK(report.cond3->joint_zero == true);
    CHECK(report.cond3->reduction_I->witness_r == 0);
    CHECK(report.cond3->reduction_J->witness_r == 0);
  }
}

TEST_CASE("Cohen-Macaulay verdict for the staircase pair is negative") {
  CmAnalysis an(m2, fix66);
  auto report = an.jr_criterion_report();
  CHECK_FALSE(report.cm);
  CHECK_FALSE(report.cond1);
  CHECK_FALSE(report.cond1_prime);
  CHECK_FALSE(report.cond2);
  CHECK(report.e00 == 1);
  CHECK(report.justification.find("e01 = 15 < len(A/J) = 16") != std::string::npos);
  CHECK(report.justification.find("e00 = 1 != 0") != std::string::npos);
}

TEST_CASE("the trivial pair is Cohen-Macaulay") {
  auto report = CmAnalysis(m2, m2).jr_criterion_report();
  CHECK(report.cm);
  CHECK(report.cond2);
  CHECK_FALSE(report.cond3.has_value());
}

TEST_CASE("the criterion refuses other dimensions") {
  auto m3 = ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(CmAnalysis(m3, m3).jr_criterion_report(), std::domain_error);
  CmAnalysis dim1(ideal(1, {{2}}), ideal(1, {{3}}));
  CHECK_THROWS_AS(dim1.jr_criterion_report(), std::domain_error);
}

TEST_CASE("cond1 and windowed cond2 agree on fixtures") {
  for (const auto* J : {&m2, &jac3, &fix66}) {
    auto report = CmAnalysis(m2, *J).jr_criterion_report();
    CHECK(report.cond1 == report.cond2);
    CHECK(report.cond1 == report.cond1_prime);
  }
}

TEST_CASE("random pairs obey the proven inequalities") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 40; ++iter) {
    auto I = oracle::random_m_primary_2d(rng, 5);
    auto J = oracle::random_m_primary_2d(rng, 5);
    CmAnalysis an(I, J);
    CHECK_NOTHROW(an.inequality_audit());
    CHECK_NOTHROW(an.e1_mixed_identity_check());
  }
}
