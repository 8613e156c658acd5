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

#ifndef BHATT_IDEAL_HPP
#define BHATT_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "bhatt/monomial.hpp"
#include "bhatt/numbers.hpp"

namespace bhatt {

/// A monomial ideal of A = k[x_1..x_n] localized at (x_1..x_n), held as its
/// unique minimal generating set in lexicographic order. Equal ideals have
/// identical representations, so equality is structural.
///
/// The unit ideal is generated by the all-zero monomial; the zero ideal has
/// no generators. Values are immutable and all operations are pure.
class MonomialIdeal {
 public:
  /// Builds the ideal generated by `generators`, dropping every generator
  /// divisible by another and sorting the survivors.
  MonomialIdeal(int vars, std::vector<Monomial> generators);

  static MonomialIdeal zero(int vars) { return MonomialIdeal(vars, {}); }
  static MonomialIdeal unit(int vars) {
    return MonomialIdeal(vars, {Monomial::one(vars)});
  }

  int vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `other` is a member.
  bool contains(const MonomialIdeal& other) const;

  /// True iff every variable has a pure-power generator, i.e. A/I has finite
  /// length. The unit ideal qualifies (its generator is x_i^0 for every i).
  bool is_m_primary() const;

  /// Exponent a_i of the minimal pure power x_i^{a_i} per variable, or
  /// nullopt when the ideal is not m-primary. Standard monomials all live in
  /// the box prod_i [0, a_i).
  std::optional<std::vector<int>> pure_power_bounds() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I);

  void check_same_vars(const MonomialIdeal& other) const;

 private:
  int vars_;
  std::vector<Monomial> gens_;
};

/// I + J: minimalized union of the generating sets.
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

/// I * J: minimalized pairwise generator products.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^r by iterated product, minimalizing at each step. I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int r);

/// I : J = intersection over generators m of J of I : (m). J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);

/// I intersect J via pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

inline MonomialIdeal operator+(const MonomialIdeal& I, const MonomialIdeal& J) {
  return sum(I, J);
}
inline MonomialIdeal operator*(const MonomialIdeal& I, const MonomialIdeal& J) {
  return product(I, J);
}

inline constexpr std::uint64_t kDefaultCellLimit = 100'000'000;

/// lambda(A/I), the number of standard monomials, counted by enumerating the
/// bounding box prod_i [0, a_i) and testing divisibility against the
/// generators. Throws std::domain_error when the ideal is not m-primary and
/// std::runtime_error when the box exceeds `max_cells`.
Integer colength(const MonomialIdeal& I,
                 std::uint64_t max_cells = kDefaultCellLimit);

}  // namespace bhatt

#endif  // BHATT_IDEAL_HPP
