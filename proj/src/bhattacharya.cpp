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

#include "bhatt/bhattacharya.hpp"

#include <stdexcept>
#include <string>

namespace bhatt {

BhattacharyaFunction::BhattacharyaFunction(MonomialIdeal I, MonomialIdeal J,
                                           std::uint64_t cell_limit)
    : I_(std::move(I)), J_(std::move(J)), cell_limit_(cell_limit) {
  I_.check_same_vars(J_);
  if (!I_.is_m_primary() || !J_.is_m_primary())
    throw std::domain_error(
        "Bhattacharya function needs m-primary ideals (or the unit ideal)");
  I_powers_.push_back(MonomialIdeal::unit(I_.vars()));
  J_powers_.push_back(MonomialIdeal::unit(I_.vars()));
}

const MonomialIdeal& BhattacharyaFunction::I_power(int r) const {
  while (static_cast<int>(I_powers_.size()) <= r)
    I_powers_.push_back(product(I_powers_.back(), I_));
  return I_powers_[static_cast<size_t>(r)];
}

const MonomialIdeal& BhattacharyaFunction::J_power(int s) const {
  while (static_cast<int>(J_powers_.size()) <= s)
    J_powers_.push_back(product(J_powers_.back(), J_));
  return J_powers_[static_cast<size_t>(s)];
}

const MonomialIdeal& BhattacharyaFunction::power_product(int r, int s) const {
  if (r < 0 || s < 0)
    throw std::invalid_argument("Bhattacharya function takes non-negative bidegrees");
  auto it = products_.find({r, s});
  if (it == products_.end())
    it = products_.emplace(std::pair{r, s}, product(I_power(r), J_power(s))).first;
  return it->second;
}

Integer BhattacharyaFunction::operator()(int r, int s) const {
  if (r < 0 || s < 0)
    throw std::invalid_argument("Bhattacharya function takes non-negative bidegrees");
  auto it = values_.find({r, s});
  if (it == values_.end())
    it = values_.emplace(std::pair{r, s},
                         colength(power_product(r, s), cell_limit_)).first;
  return it->second;
}

BhattacharyaTable tabulate(const BhattacharyaFunction& B, const Window& window) {
  if (window.r_lo < 0 || window.s_lo < 0 || window.r_lo > window.r_hi ||
      window.s_lo > window.s_hi)
    throw std::invalid_argument("table window is empty or negative");
  BhattacharyaTable table;
  table.window = window;
  table.values.resize(static_cast<size_t>(window.rows()));
  for (int r = window.r_lo; r <= window.r_hi; ++r) {
    auto& row = table.values[static_cast<size_t>(r - window.r_lo)];
    row.reserve(static_cast<size_t>(window.cols()));
    for (int s = window.s_lo; s <= window.s_hi; ++s) row.push_back(B(r, s));
  }
  return table;
}

BinomialPolynomial2::BinomialPolynomial2(
    int degree, std::map<std::pair<int, int>, Integer> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("polynomial degree is negative");
  for (const auto& [ij, c] : coeffs_) {
    (void)c;
    if (ij.first < 0 || ij.second < 0 || ij.first + ij.second > degree_)
      throw std::invalid_argument("coefficient index outside the degree bound");
  }
  // Every slot present makes comparisons structural.
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; i + j <= degree_; ++j) coeffs_.try_emplace({i, j}, 0);
}

const Integer& BinomialPolynomial2::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  if (it == coeffs_.end())
    throw std::out_of_range("coefficient index outside the degree bound");
  return it->second;
}

Integer BinomialPolynomial2::eval(long long r, long long s) const {
  Integer total = 0;
  for (const auto& [ij, c] : coeffs_)
    if (c != 0) total += c * binomial(r, ij.first) * binomial(s, ij.second);
  return total;
}

BinomialPolynomial2 BinomialPolynomial2::transpose() const {
  std::map<std::pair<int, int>, Integer> swapped;
  for (const auto& [ij, c] : coeffs_) swapped[{ij.second, ij.first}] = c;
  return BinomialPolynomial2(degree_, std::move(swapped));
}

namespace {

// Exact Gauss-Jordan elimination on the augmented matrix of an overdetermined
// system. Returns the unique solution when the system is consistent with full
// column rank, nullopt otherwise.
std::optional<std::vector<Rational>> solve_exact(
    std::vector<std::vector<Rational>> aug, size_t ncols) {
  const size_t nrows = aug.size();
  size_t row = 0;
  std::vector<size_t> pivot_row(ncols);
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t pr = row;
    while (pr < nrows && aug[pr][col] == 0) ++pr;
    if (pr == nrows) return std::nullopt;  // rank deficient
    std::swap(aug[row], aug[pr]);
    const Rational pivot = aug[row][col];
    for (auto& v : aug[row]) v /= pivot;
    for (size_t r2 = 0; r2 < nrows; ++r2) {
      if (r2 == row || aug[r2][col] == 0) continue;
      const Rational factor = aug[r2][col];
      for (size_t c2 = col; c2 <= ncols; ++c2) aug[r2][c2] -= factor * aug[row][c2];
    }
    pivot_row[col] = row;
    ++row;
  }
  if (row < ncols) return std::nullopt;
  for (size_t r2 = row; r2 < nrows; ++r2)
    if (aug[r2][ncols] != 0) return std::nullopt;  // inconsistent
  std::vector<Rational> solution(ncols);
  for (size_t col = 0; col < ncols; ++col)
    solution[col] = aug[pivot_row[col]][ncols];
  return solution;
}

Rational eval_rational(const std::vector<std::pair<int, int>>& slots,
                       const std::vector<Rational>& coeffs, int r, int s) {
  Rational total = 0;
  for (size_t k = 0; k < slots.size(); ++k)
    if (coeffs[k] != 0)
      total += coeffs[k] * Rational(binomial(r, slots[k].first) *
                                    binomial(s, slots[k].second));
  return total;
}

std::optional<std::pair<int, int>> find_postulation(
    const BinomialPolynomial2& poly, const BhattacharyaFunction& B, int r_hi,
    int s_hi) {
  const int rows = r_hi + 1, cols = s_hi + 1;
  // quad[r][s]: P = B on the whole quadrant [r, r_hi] x [s, s_hi].
  std::vector<std::vector<bool>> quad(static_cast<size_t>(rows),
                                      std::vector<bool>(static_cast<size_t>(cols)));
  for (int r = r_hi; r >= 0; --r)
    for (int s = s_hi; s >= 0; --s) {
      bool here = poly.eval(r, s) == B(r, s);
      if (here && r + 1 <= r_hi) here = quad[static_cast<size_t>(r + 1)][static_cast<size_t>(s)];
      if (here && s + 1 <= s_hi) here = quad[static_cast<size_t>(r)][static_cast<size_t>(s + 1)];
      quad[static_cast<size_t>(r)][static_cast<size_t>(s)] = here;
    }
  std::optional<std::pair<int, int>> best;
  for (int r = 0; r <= r_hi; ++r)
    for (int s = 0; s <= s_hi; ++s) {
      if (!quad[static_cast<size_t>(r)][static_cast<size_t>(s)]) continue;
      bool minimal = (r == 0 || !quad[static_cast<size_t>(r - 1)][static_cast<size_t>(s)]) &&
                     (s == 0 || !quad[static_cast<size_t>(r)][static_cast<size_t>(s - 1)]);
      if (!minimal) continue;
      if (!best || r + s < best->first + best->second ||
          (r + s == best->first + best->second && r < best->first))
        best = {r, s};
    }
  return best;
}

}  // namespace

std::vector<std::pair<int, int>> coefficient_order(int degree) {
  std::vector<std::pair<int, int>> slots;
  for (int deg = degree; deg >= 0; --deg)
    for (int i = deg; i >= 0; --i) slots.push_back({i, deg - i});
  return slots;
}

FitReport fit(const BhattacharyaFunction& B, const FitConfig& config) {
  const int d = config.degree.value_or(B.vars());
  if (d < 0) throw std::invalid_argument("fit degree is negative");
  if (config.base.first < 0 || config.base.second < 0)
    throw std::invalid_argument("fit base is negative");
  if (config.validate_width < 1)
    throw std::invalid_argument("validate_width must be positive");

  const auto slots = coefficient_order(d);

  for (int shift = 0; shift <= config.max_shifts; ++shift) {
    const int r0 = config.base.first + shift;
    const int s0 = config.base.second + shift;

    std::vector<std::vector<Rational>> aug;
    aug.reserve(static_cast<size_t>((d + 1) * (d + 1)));
    for (int u = 0; u <= d; ++u)
      for (int v = 0; v <= d; ++v) {
        std::vector<Rational> row;
        row.reserve(slots.size() + 1);
        for (const auto& [i, j] : slots)
          row.emplace_back(binomial(r0 + u, i) * binomial(s0 + v, j));
        row.emplace_back(B(r0 + u, s0 + v));
        aug.push_back(std::move(row));
      }

    auto solution = solve_exact(std::move(aug), slots.size());
    if (!solution) continue;

    const int r_hi = r0 + d + config.validate_width;
    const int s_hi = s0 + d + config.validate_width;
    bool valid = true;
    for (int r = r0; r <= r_hi && valid; ++r)
      for (int s = s0; s <= s_hi && valid; ++s)
        if (eval_rational(slots, *solution, r, s) != Rational(B(r, s)))
          valid = false;
    if (!valid) continue;

    std::map<std::pair<int, int>, Integer> coeffs;
    for (size_t k = 0; k < slots.size(); ++k) {
      const Rational& c = (*solution)[k];
      if (denominator(c) != 1)
        throw std::logic_error(
            "fitted coefficient e[" + std::to_string(slots[k].first) + "][" +
            std::to_string(slots[k].second) + "] is not an integer");
      coeffs[slots[k]] = numerator(c);
    }
    FitReport report;
    report.polynomial = BinomialPolynomial2(d, std::move(coeffs));
    report.base = {r0, s0};
    report.validated_on = Window{r0, r_hi, s0, s_hi};
    report.postulation = find_postulation(report.polynomial, B, r_hi, s_hi);
    return report;
  }
  throw std::runtime_error("polynomial regime not reached within " +
                           std::to_string(config.max_shifts) + " base shifts");
}

namespace {

// Iterated forward difference D_r^i D_s^j B at (t, t), which equals e_ij once
// (t, t) is deep enough in the polynomial region and i + j is the total
// degree.
Integer forward_difference(const BhattacharyaFunction& B, int i, int j, int t) {
  Integer total = 0;
  for (int u = 0; u <= i; ++u)
    for (int v = 0; v <= j; ++v) {
      Integer term = binomial(i, u) * binomial(j, v) * B(t + u, t + v);
      if (((i - u) + (j - v)) % 2 == 1)
        total -= term;
      else
        total += term;
    }
  return total;
}

}  // namespace

std::vector<Integer> mixed_multiplicities(const BhattacharyaFunction& B,
                                          const FitConfig& config) {
  FitReport report = fit(B, config);
  const int d = report.polynomial.degree();

  std::vector<Integer> result;
  result.reserve(static_cast<size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const Integer& fitted = report.polynomial.coeff(d - j, j);

    const int t0 = std::max(config.base.first, config.base.second);
    const int t_cap = t0 + 16;
    std::optional<Integer> settled;
    Integer prev = forward_difference(B, d - j, j, t0);
    for (int t = t0 + 1; t <= t_cap; ++t) {
      Integer cur = forward_difference(B, d - j, j, t);
      if (cur == prev) {
        settled = cur;
        break;
      }
      prev = std::move(cur);
    }
    if (!settled)
      throw std::runtime_error("difference extraction of e_" + std::to_string(j) +
                               " did not settle");
    if (*settled != fitted)
      throw std::runtime_error(
          "mixed multiplicity e_" + std::to_string(j) +
          " disagrees between the fit and the difference path (fit unstable)");
    result.push_back(fitted);
  }
  return result;
}

HilbertCoefficients hilbert_fit_single(const MonomialIdeal& I,
                                       const FitConfig& config) {
  if (I.vars() != 2)
    throw std::domain_error("single-ideal Hilbert fit needs ambient dimension 2");
  BhattacharyaFunction B(I, MonomialIdeal::unit(2));
  FitConfig cfg = config;
  cfg.degree = 2;
  FitReport report = fit(B, cfg);
  for (const auto& [ij, c] : report.polynomial.coeffs())
    if (ij.second > 0 && c != 0)
      throw std::logic_error("single-ideal fit produced a mixed coefficient");
  return {report.polynomial.coeff(2, 0), report.polynomial.coeff(1, 0),
          report.polynomial.coeff(0, 0)};
}

}  // namespace bhatt
