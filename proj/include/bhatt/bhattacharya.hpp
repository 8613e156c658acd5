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

#ifndef BHATT_BHATTACHARYA_HPP
#define BHATT_BHATTACHARYA_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bhatt/ideal.hpp"

namespace bhatt {

/// The Bhattacharya function B(r, s) = lambda(A / I^r J^s) of a pair of
/// m-primary ideals, with memoized values and incrementally grown power
/// caches. J may be the unit ideal, which gives the Hilbert-Samuel function
/// of I alone.
///
/// Instances are logically immutable but keep mutable caches; share one
/// instance per worker rather than across threads.
class BhattacharyaFunction {
 public:
  BhattacharyaFunction(MonomialIdeal I, MonomialIdeal J,
                       std::uint64_t cell_limit = kDefaultCellLimit);

  const MonomialIdeal& I() const { return I_; }
  const MonomialIdeal& J() const { return J_; }
  int vars() const { return I_.vars(); }

  /// B(r, s). Exact; throws std::runtime_error if the staircase box for
  /// I^r J^s exceeds the cell limit.
  Integer operator()(int r, int s) const;

  /// The ideal I^r J^s backing a table cell.
  const MonomialIdeal& power_product(int r, int s) const;

 private:
  const MonomialIdeal& I_power(int r) const;
  const MonomialIdeal& J_power(int s) const;

  MonomialIdeal I_, J_;
  std::uint64_t cell_limit_;
  mutable std::vector<MonomialIdeal> I_powers_, J_powers_;
  mutable std::map<std::pair<int, int>, MonomialIdeal> products_;
  mutable std::map<std::pair<int, int>, Integer> values_;
};

/// A rectangular window of bidegrees, bounds inclusive.
struct Window {
  int r_lo = 0;
  int r_hi = 0;
  int s_lo = 0;
  int s_hi = 0;

  int rows() const { return r_hi - r_lo + 1; }
  int cols() const { return s_hi - s_lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Dense window of exact B(r, s) values; values[r - r_lo][s - s_lo].
struct BhattacharyaTable {
  Window window;
  std::vector<std::vector<Integer>> values;
};

BhattacharyaTable tabulate(const BhattacharyaFunction& B, const Window& window);

/// An integer polynomial sum_{i+j <= d} e_ij C(r, i) C(s, j) in the binomial
/// basis. Coefficients with i + j = d are the mixed multiplicities.
class BinomialPolynomial2 {
 public:
  BinomialPolynomial2() = default;
  BinomialPolynomial2(int degree, std::map<std::pair<int, int>, Integer> coeffs);

  int degree() const { return degree_; }
  const Integer& coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Integer>& coeffs() const { return coeffs_; }

  Integer eval(long long r, long long s) const;

  /// Coefficients with i and j swapped; the fit of the swapped ideal pair.
  BinomialPolynomial2 transpose() const;

  friend bool operator==(const BinomialPolynomial2&, const BinomialPolynomial2&) = default;

 private:
  int degree_ = 0;
  std::map<std::pair<int, int>, Integer> coeffs_;
};

/// Coefficient slots (i, j) with i + j <= degree in reporting order: total
/// degree descending, then i descending.
std::vector<std::pair<int, int>> coefficient_order(int degree);

struct FitConfig {
  std::optional<int> degree;     // total degree d; defaults to the ambient dimension
  std::pair<int, int> base{1, 1};
  int validate_width = 3;        // band reaches base + degree + validate_width
  int max_shifts = 12;           // diagonal base shifts before giving up
};

struct FitReport {
  BinomialPolynomial2 polynomial;
  std::pair<int, int> base;
  Window validated_on;
  /// Minimal sampled corner whose upper-right quadrant has B = P throughout,
  /// ties broken by smallest r + s, then smallest r.
  std::optional<std::pair<int, int>> postulation;
};

/// Interpolates the polynomial that B agrees with for large arguments:
/// samples B on the (d+1) x (d+1) grid at the base, solves the exact rational
/// system for the e_ij, and accepts only if the prediction matches B exactly
/// on the whole validation band. On mismatch the base shifts diagonally and
/// the fit retries; std::runtime_error when the budget runs out.
FitReport fit(const BhattacharyaFunction& B, const FitConfig& config = {});

/// Top-degree coefficients e_j = e_{d-j,j}, j = 0..d, cross-checked against
/// iterated forward differences of B. Disagreement throws std::runtime_error.
std::vector<Integer> mixed_multiplicities(const BhattacharyaFunction& B,
                                          const FitConfig& config = {});

/// Hilbert coefficients of a single m-primary ideal in two variables, in the
/// normalization lambda(A/I^r) = e0 C(r,2) + e1 r + e2.
struct HilbertCoefficients {
  Integer e0, e1, e2;
};

HilbertCoefficients hilbert_fit_single(const MonomialIdeal& I,
                                       const FitConfig& config = {});

}  // namespace bhatt

#endif  // BHATT_BHATTACHARYA_HPP
