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

#ifndef BHATT_REDUCTIONS_HPP
#define BHATT_REDUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bhatt/ideal.hpp"

namespace bhatt {

// Only monomial witnesses are accepted throughout this module: it verifies
// user-supplied candidates and never searches for (generally non-monomial)
// minimal reductions.

enum class ReductionKind { Reduction, Complete, JointZero, Decomposition };

struct ReductionCertificate {
  ReductionKind kind = ReductionKind::Reduction;
  bool holds = false;
  std::optional<int> witness_r;  // reduction number when holds
  int checked_up_to = 0;
};

/// Checks whether K is a reduction of I by testing I^{r+1} = K I^r for
/// r = 0, 1, ..., r_max; reports the smallest such r (the reduction number).
/// Requires K to sit inside I.
ReductionCertificate is_reduction(const MonomialIdeal& K, const MonomialIdeal& I,
                                  int r_max = 10);

/// One summand m * I^a J^b of a bidegree decomposition.
struct DecompTerm {
  Monomial m;
  int a = 0;
  int b = 0;

  friend bool operator==(const DecompTerm&, const DecompTerm&) = default;
};

/// Verifies sum_i m_i I^{a_i} J^{b_i} = I^a J^b for target degree (a, b).
/// Each m_i must lie in the complementary power I^{a-a_i} J^{b-b_i}, so that
/// every summand is contained in the target.
bool verify_decomposition(const MonomialIdeal& I, const MonomialIdeal& J,
                          std::pair<int, int> target,
                          const std::vector<DecompTerm>& terms);

/// Joint reduction number zero for the pair (I, J): x J + y I = I J with
/// x in I, y in J.
bool joint_reduction_zero(const Monomial& x, const Monomial& y,
                          const MonomialIdeal& I, const MonomialIdeal& J);

/// Forms y_j = first_j * second_j from d element pairs (first in I, second in
/// J), d the ambient dimension, and certifies (y_1, ..., y_d) as a reduction
/// of I J.
ReductionCertificate complete_reduction_check(
    const std::vector<std::pair<Monomial, Monomial>>& pairs,
    const MonomialIdeal& I, const MonomialIdeal& J, int r_max = 10);

}  // namespace bhatt

#endif  // BHATT_REDUCTIONS_HPP
