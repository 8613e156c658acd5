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

#include "bhatt/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bhatt {

namespace {

// Divisors never have larger total degree, so after sorting by degree a
// single forward sweep removes every redundant generator (duplicates
// included).
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> generators)
    : vars_(vars) {
  if (vars < 1)
    throw std::invalid_argument("ideal needs a positive ambient dimension");
  for (const auto& g : generators)
    if (g.vars() != vars)
      throw std::invalid_argument("generator dimension differs from ambient ring");
  gens_ = minimalize(std::move(generators));
}

void MonomialIdeal::check_same_vars(const MonomialIdeal& other) const {
  if (vars_ != other.vars_)
    throw std::invalid_argument("ambient dimension mismatch between ideals");
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.vars() != vars_)
    throw std::invalid_argument("ambient dimension mismatch between ideal and monomial");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  check_same_vars(other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_m_primary() const {
  return pure_power_bounds().has_value();
}

std::optional<std::vector<int>> MonomialIdeal::pure_power_bounds() const {
  std::vector<int> bounds(static_cast<size_t>(vars_), -1);
  for (const auto& g : gens_) {
    int support_var = -1;
    bool pure = true;
    for (int i = 0; i < vars_; ++i) {
      if (g.exponent(i) == 0) continue;
      if (support_var >= 0) {
        pure = false;
        break;
      }
      support_var = i;
    }
    if (!pure) continue;
    if (support_var < 0) {
      // The generator 1: unit ideal, box degenerates to a point.
      std::fill(bounds.begin(), bounds.end(), 0);
      return bounds;
    }
    int e = g.exponent(support_var);
    auto& slot = bounds[static_cast<size_t>(support_var)];
    if (slot < 0 || e < slot) slot = e;
  }
  for (int b : bounds)
    if (b < 0) return std::nullopt;
  return bounds;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
  os << '{';
  for (size_t i = 0; i < I.gens_.size(); ++i) {
    if (i) os << ", ";
    os << I.gens_[i];
  }
  return os << '}';
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  I.check_same_vars(J);
  std::vector<Monomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  I.check_same_vars(J);
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(g * h);
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int r) {
  if (r < 0) throw std::invalid_argument("ideal power is negative");
  MonomialIdeal result = MonomialIdeal::unit(I.vars());
  for (int i = 0; i < r; ++i) result = product(result, I);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  I.check_same_vars(J);
  if (J.is_zero()) throw std::domain_error("colon by zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(I.vars());
  bool first = true;
  for (const auto& m : J.generators()) {
    std::vector<Monomial> quotients;
    quotients.reserve(I.generators().size());
    for (const auto& g : I.generators())
      quotients.push_back(colon_quotient(g, m));
    MonomialIdeal by_m(I.vars(), std::move(quotients));
    result = first ? by_m : intersect(result, by_m);
    first = false;
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  I.check_same_vars(J);
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size() * J.generators().size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(I.vars(), std::move(gens));
}

Integer colength(const MonomialIdeal& I, std::uint64_t max_cells) {
  auto bounds = I.pure_power_bounds();
  if (!bounds)
    throw std::domain_error("colength is infinite: ideal is not m-primary");
  const auto& a = *bounds;
  const int n = I.vars();

  std::uint64_t volume = 1;
  for (int b : a) {
    if (b == 0) return 0;
    if (volume > max_cells / static_cast<std::uint64_t>(b))
      throw std::runtime_error("colength box exceeds the cell limit of " +
                               std::to_string(max_cells) + " cells");
    volume *= static_cast<std::uint64_t>(b);
  }

  const auto& gens = I.generators();
  std::vector<int> pt(static_cast<size_t>(n), 0);
  std::uint64_t standard = 0;
  for (;;) {
    bool inside = false;
    for (const auto& g : gens) {
      const auto& e = g.exponents();
      bool div = true;
      for (int i = 0; i < n; ++i) {
        if (e[static_cast<size_t>(i)] > pt[static_cast<size_t>(i)]) {
          div = false;
          break;
        }
      }
      if (div) {
        inside = true;
        break;
      }
    }
    if (!inside) ++standard;

    int i = 0;
    while (i < n) {
      auto& c = pt[static_cast<size_t>(i)];
      if (++c < a[static_cast<size_t>(i)]) break;
      c = 0;
      ++i;
    }
    if (i == n) break;
  }
  return Integer(standard);
}

}  // namespace bhatt
