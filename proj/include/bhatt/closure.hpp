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

#ifndef BHATT_CLOSURE_HPP
#define BHATT_CLOSURE_HPP

#include <vector>

#include "bhatt/ideal.hpp"

namespace bhatt {

/// Stabilization policy for the ascending colon chains below. The chains have
/// no effective a-priori bound, so a value is accepted once it repeats for
/// `confirm_steps` consecutive k and flagged `capped` when `k_cap` is reached
/// first.
struct ClosureConfig {
  int confirm_steps = 2;
  int k_cap = 20;
};

struct ClosureResult {
  MonomialIdeal closure;
  int stabilized_at = 0;    // first k whose value was confirmed stable
  int confirmed_steps = 0;  // consecutive equal observations of that value
  bool capped = false;      // k_cap hit before confirmation; result advisory
};

/// The k-th member I^{a+k}J^{b+k} : I^kJ^k of the colon chain whose union is
/// the Ratliff-Rush closure of I^aJ^b. k = 0 gives I^aJ^b itself. J may be
/// the unit ideal, which reduces to the single-ideal chain I^{a+k} : I^k.
MonomialIdeal rr_component(const MonomialIdeal& I, const MonomialIdeal& J,
                           int a, int b, int k);

/// Ratliff-Rush closure of I^aJ^b as the stable value of the rr_component
/// chain.
ClosureResult rr_closure(const MonomialIdeal& I, const MonomialIdeal& J,
                         int a, int b, const ClosureConfig& config = {});

/// Same closure computed against powers of the given elements of IJ:
/// I^{a+k}J^{b+k} : (y_1^k, ..., y_d^k). The ys must come from a verified
/// complete reduction of (I, J); this routine checks membership in IJ only,
/// the caller certifies reduction-ness (see reductions.hpp).
ClosureResult rr_closure_via_reduction(const MonomialIdeal& I,
                                       const MonomialIdeal& J, int a, int b,
                                       const std::vector<Monomial>& ys,
                                       const ClosureConfig& config = {});

struct DefectResult {
  Integer value;         // lambda(closure / I^rJ^s), always >= 0
  bool certified = true; // false when the closure chain was capped
};

/// Length of the Ratliff-Rush quotient (I^rJ^s)~ / I^rJ^s.
DefectResult rr_defect(const MonomialIdeal& I, const MonomialIdeal& J, int r,
                       int s, const ClosureConfig& config = {});

}  // namespace bhatt

#endif  // BHATT_CLOSURE_HPP
