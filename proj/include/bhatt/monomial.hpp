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

#ifndef BHATT_MONOMIAL_HPP
#define BHATT_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace bhatt {

/// A monomial in n variables, stored as its exponent vector. Exponents are
/// non-negative and the ambient variable count is fixed per value. Monomials
/// are immutable; every operation returns a fresh value.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    if (exp_.empty())
      throw std::invalid_argument("monomial needs at least one variable");
    for (int e : exp_)
      if (e < 0) throw std::invalid_argument("monomial exponent is negative");
  }

  /// The unit monomial 1 in `vars` variables.
  static Monomial one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

  int vars() const { return static_cast<int>(exp_.size()); }
  int exponent(int i) const { return exp_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }

  long long total_degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0LL);
  }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
  }

  /// True iff this monomial divides `m` (componentwise <=).
  bool divides(const Monomial& m) const {
    check_same_vars(m);
    for (size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > m.exp_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    check_same_vars(m);
    std::vector<int> e(exp_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exp_[i] + m.exp_[i];
    return Monomial(std::move(e));
  }

  Monomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("monomial power is negative");
    std::vector<int> e(exp_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exp_[i] * k;
    return Monomial(std::move(e));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same_vars(b);
    std::vector<int> e(a.exp_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp_[i], b.exp_[i]);
    return Monomial(std::move(e));
  }

  /// lcm(a, d) / d, the generator of (a) : (d). Componentwise max(a - d, 0).
  friend Monomial colon_quotient(const Monomial& a, const Monomial& d) {
    a.check_same_vars(d);
    std::vector<int> e(a.exp_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp_[i] - d.exp_[i], 0);
    return Monomial(std::move(e));
  }

  // Lexicographic order on exponent vectors; the canonical generator order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    os << '(';
    for (size_t i = 0; i < m.exp_.size(); ++i) {
      if (i) os << ',';
      os << m.exp_[i];
    }
    return os << ')';
  }

  void check_same_vars(const Monomial& m) const {
    if (exp_.size() != m.exp_.size())
      throw std::invalid_argument("ambient dimension mismatch between monomials");
  }

 private:
  std::vector<int> exp_;
};

}  // namespace bhatt

#endif  // BHATT_MONOMIAL_HPP
