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

#include "bhatt/closure.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace bhatt {

namespace {

void check_inputs(const MonomialIdeal& I, const MonomialIdeal& J, int a, int b) {
  I.check_same_vars(J);
  if (a < 0 || b < 0)
    throw std::invalid_argument("closure exponents must be non-negative");
  if (!I.is_m_primary() || !J.is_m_primary())
    throw std::domain_error("Ratliff-Rush closure needs m-primary ideals");
}

ClosureResult stabilize(const std::function<MonomialIdeal(int)>& component,
                        const ClosureConfig& cfg) {
  if (cfg.confirm_steps < 2)
    throw std::invalid_argument("confirm_steps must be at least 2");
  if (cfg.k_cap < 1) throw std::invalid_argument("k_cap must be positive");

  MonomialIdeal current = component(0);
  int first_k = 0;
  int streak = 1;
  for (int k = 1; k <= cfg.k_cap; ++k) {
    MonomialIdeal next = component(k);
    if (!next.contains(current))
      throw std::logic_error("colon chain failed to ascend at k = " +
                             std::to_string(k));
    if (next == current) {
      if (++streak >= cfg.confirm_steps)
        return {std::move(next), first_k, streak, false};
    } else {
      current = std::move(next);
      first_k = k;
      streak = 1;
    }
  }
  return {std::move(current), first_k, streak, true};
}

}  // namespace

MonomialIdeal rr_component(const MonomialIdeal& I, const MonomialIdeal& J,
                           int a, int b, int k) {
  check_inputs(I, J, a, b);
  if (k < 0) throw std::invalid_argument("chain index must be non-negative");
  MonomialIdeal numerator = product(power(I, a + k), power(J, b + k));
  if (k == 0) return numerator;
  return colon(numerator, product(power(I, k), power(J, k)));
}

ClosureResult rr_closure(const MonomialIdeal& I, const MonomialIdeal& J,
                         int a, int b, const ClosureConfig& config) {
  check_inputs(I, J, a, b);
  return stabilize([&](int k) { return rr_component(I, J, a, b, k); }, config);
}

ClosureResult rr_closure_via_reduction(const MonomialIdeal& I,
                                       const MonomialIdeal& J, int a, int b,
                                       const std::vector<Monomial>& ys,
                                       const ClosureConfig& config) {
  check_inputs(I, J, a, b);
  if (ys.empty())
    throw std::invalid_argument("reduction element list is empty");
  MonomialIdeal IJ = product(I, J);
  for (size_t i = 0; i < ys.size(); ++i)
    if (!IJ.contains(ys[i]))
      throw std::invalid_argument("reduction element #" + std::to_string(i + 1) +
                                  " is not in I*J");
  return stabilize(
      [&](int k) {
        MonomialIdeal numerator = product(power(I, a + k), power(J, b + k));
        if (k == 0) return numerator;
        std::vector<Monomial> powers;
        powers.reserve(ys.size());
        for (const auto& y : ys) powers.push_back(y.pow(k));
        return colon(numerator, MonomialIdeal(I.vars(), std::move(powers)));
      },
      config);
}

DefectResult rr_defect(const MonomialIdeal& I, const MonomialIdeal& J, int r,
                       int s, const ClosureConfig& config) {
  ClosureResult closed = rr_closure(I, J, r, s, config);
  Integer plain = colength(product(power(I, r), power(J, s)));
  Integer value = plain - colength(closed.closure);
  if (value < 0)
    throw std::logic_error("Ratliff-Rush defect came out negative");
  return {std::move(value), !closed.capped};
}

}  // namespace bhatt
