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

#include "bhatt/reductions.hpp"

#include <stdexcept>
#include <string>

namespace bhatt {

ReductionCertificate is_reduction(const MonomialIdeal& K, const MonomialIdeal& I,
                                  int r_max) {
  K.check_same_vars(I);
  if (r_max < 0) throw std::invalid_argument("r_max must be non-negative");
  if (!I.contains(K))
    throw std::invalid_argument("reduction candidate is not contained in the ideal");

  MonomialIdeal I_pow = MonomialIdeal::unit(I.vars());  // I^r
  for (int r = 0; r <= r_max; ++r) {
    MonomialIdeal next = product(I_pow, I);  // I^{r+1}
    if (next == product(K, I_pow))
      return {ReductionKind::Reduction, true, r, r};
    I_pow = std::move(next);
  }
  return {ReductionKind::Reduction, false, std::nullopt, r_max};
}

bool verify_decomposition(const MonomialIdeal& I, const MonomialIdeal& J,
                          std::pair<int, int> target,
                          const std::vector<DecompTerm>& terms) {
  I.check_same_vars(J);
  const auto [a, b] = target;
  if (a < 0 || b < 0)
    throw std::invalid_argument("decomposition target degree is negative");

  MonomialIdeal lhs = MonomialIdeal::zero(I.vars());
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string label = "decomposition term #" + std::to_string(i + 1);
    if (t.a < 0 || t.b < 0 || t.a > a || t.b > b)
      throw std::invalid_argument(label + ": degree (" + std::to_string(t.a) +
                                  "," + std::to_string(t.b) +
                                  ") does not fit under the target");
    if (!product(power(I, a - t.a), power(J, b - t.b)).contains(t.m))
      throw std::invalid_argument(label + ": monomial is not in I^" +
                                  std::to_string(a - t.a) + " J^" +
                                  std::to_string(b - t.b));
    MonomialIdeal summand =
        product(MonomialIdeal(I.vars(), {t.m}),
                product(power(I, t.a), power(J, t.b)));
    lhs = sum(lhs, summand);
  }
  return lhs == product(power(I, a), power(J, b));
}

bool joint_reduction_zero(const Monomial& x, const Monomial& y,
                          const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!I.contains(x))
    throw std::invalid_argument("joint reduction element x is not in I");
  if (!J.contains(y))
    throw std::invalid_argument("joint reduction element y is not in J");
  return verify_decomposition(I, J, {1, 1}, {{x, 0, 1}, {y, 1, 0}});
}

ReductionCertificate complete_reduction_check(
    const std::vector<std::pair<Monomial, Monomial>>& pairs,
    const MonomialIdeal& I, const MonomialIdeal& J, int r_max) {
  I.check_same_vars(J);
  if (static_cast<int>(pairs.size()) != I.vars())
    throw std::invalid_argument(
        "a complete reduction needs exactly one element pair per variable");
  std::vector<Monomial> ys;
  ys.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& [xi, yi] = pairs[i];
    const std::string label = "complete reduction pair #" + std::to_string(i + 1);
    if (!I.contains(xi))
      throw std::invalid_argument(label + ": first element is not in I");
    if (!J.contains(yi))
      throw std::invalid_argument(label + ": second element is not in J");
    ys.push_back(xi * yi);
  }
  auto cert = is_reduction(MonomialIdeal(I.vars(), std::move(ys)),
                           product(I, J), r_max);
  cert.kind = ReductionKind::Complete;
  return cert;
}

}  // namespace bhatt
