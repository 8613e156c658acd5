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

#include "bhatt/cm.hpp"

#include <sstream>
#include <stdexcept>

namespace bhatt {

CmAnalysis::CmAnalysis(MonomialIdeal I, MonomialIdeal J, CmOptions options)
    : B_(std::move(I), std::move(J), options.cell_limit),
      options_(std::move(options)) {}

const FitReport& CmAnalysis::fit_report() const {
  if (!fit_) fit_ = fit(B_, options_.fit);
  return *fit_;
}

Integer CmAnalysis::difference(int r, int s) const {
  return fit_report().polynomial.eval(r, s) - B_(r, s);
}

DifferenceTable CmAnalysis::difference_table(const Window& window) const {
  if (window.r_lo < 0 || window.s_lo < 0 || window.r_lo > window.r_hi ||
      window.s_lo > window.s_hi)
    throw std::invalid_argument("difference window is empty or negative");
  DifferenceTable table;
  table.window = window;
  table.values.resize(static_cast<size_t>(window.rows()));
  for (int r = window.r_lo; r <= window.r_hi; ++r) {
    auto& row = table.values[static_cast<size_t>(r - window.r_lo)];
    row.reserve(static_cast<size_t>(window.cols()));
    for (int s = window.s_lo; s <= window.s_hi; ++s)
      row.push_back(difference(r, s));
  }
  return table;
}

const DefectResult& CmAnalysis::defect(int r, int s) const {
  auto it = defects_.find({r, s});
  if (it == defects_.end())
    it = defects_
             .emplace(std::pair{r, s},
                      rr_defect(B_.I(), B_.J(), r, s, options_.closure))
             .first;
  return it->second;
}

void CmAnalysis::require_dim2(const char* what) const {
  if (vars() != 2)
    throw std::domain_error(std::string(what) +
                            " requires ambient dimension 2 (got " +
                            std::to_string(vars()) + ")");
}

Integer CmAnalysis::h2_length(int r, int s) const {
  require_dim2("the indirect second-cohomology length");
  const DefectResult& d = defect(r, s);
  Integer value = difference(r, s) + d.value;
  if (value < 0) {
    if (!d.certified)
      throw std::runtime_error(
          "negative h2 length with an uncertified Ratliff-Rush closure; "
          "raise the chain cap");
    throw std::logic_error("negative h2 length with a certified closure");
  }
  return value;
}

bool CmAnalysis::e00_identity_check() const {
  require_dim2("the constant-term identity");
  return fit_report().polynomial.coeff(0, 0) == h2_length(0, 0);
}

MonotonicityResult CmAnalysis::diagonal_monotonicity(const Window& window) const {
  require_dim2("diagonal monotonicity");
  MonotonicityResult result;
  result.window = window;
  for (int r = window.r_lo; r < window.r_hi; ++r)
    for (int s = window.s_lo; s < window.s_hi; ++s)
      if (h2_length(r + 1, s + 1) > h2_length(r, s)) {
        result.holds = false;
        if (!result.first_violation) result.first_violation = {r, s};
      }
  return result;
}

InequalityAudit CmAnalysis::inequality_audit() const {
  if (vars() != 1 && vars() != 2)
    throw std::domain_error(
        "the coefficient inequalities are available in dimensions 1 and 2");
  InequalityAudit audit;
  audit.dim = vars();
  audit.len_I = B_(1, 0);
  audit.len_J = B_(0, 1);
  const auto& poly = fit_report().polynomial;
  audit.e10 = poly.coeff(1, 0);
  audit.e01 = poly.coeff(0, 1);
  audit.e00 = poly.coeff(0, 0);
  const Integer slack = audit.dim == 1 ? audit.e00 : Integer(0);
  if (audit.len_I < audit.e10 + slack || audit.len_J < audit.e01 + slack)
    throw std::logic_error(
        "coefficient inequality violated; this contradicts a proven bound");
  return audit;
}

bool CmAnalysis::e1_mixed_identity_check() const {
  require_dim2("the e11 identity");
  Integer e11 = fit_report().polynomial.coeff(1, 1);
  Integer diff = B_(1, 1) - B_(1, 0) - B_(0, 1);
  if (e11 < diff)
    throw std::logic_error(
        "e11 fell below len(A/IJ) - len(A/I) - len(A/J); this contradicts a "
        "proven bound");
  return e11 == diff;
}

CMReport CmAnalysis::jr_criterion_report(const Window& cond2_window,
                                         const CMWitnesses* witnesses) const {
  require_dim2("the Cohen-Macaulay criterion");
  if (!B_.I().is_m_primary() || !B_.J().is_m_primary())
    throw std::domain_error("the Cohen-Macaulay criterion needs m-primary ideals");

  CMReport report;
  report.e_coeffs = fit_report().polynomial;
  report.len_I = B_(1, 0);
  report.len_J = B_(0, 1);
  report.e00 = report.e_coeffs.coeff(0, 0);

  const Integer& e10 = report.e_coeffs.coeff(1, 0);
  const Integer& e01 = report.e_coeffs.coeff(0, 1);
  report.cond1 = e10 == report.len_I && e01 == report.len_J;
  report.cond1_prime = e10 >= report.len_I && e01 >= report.len_J;

  report.cond2_window = cond2_window;
  report.cond2 = true;
  for (int r = cond2_window.r_lo; r <= cond2_window.r_hi && report.cond2; ++r)
    for (int s = cond2_window.s_lo; s <= cond2_window.s_hi; ++s)
      if (difference(r, s) != 0) {
        report.cond2 = false;
        break;
      }

  if (witnesses) {
    CMReport::Cond3 c3;
    if (witnesses->joint)
      c3.joint_zero = joint_reduction_zero(witnesses->joint->first,
                                           witnesses->joint->second, B_.I(),
                                           B_.J());
    if (witnesses->reduction_I)
      c3.reduction_I = is_reduction(
          MonomialIdeal(vars(), *witnesses->reduction_I), B_.I(),
          witnesses->r_max);
    if (witnesses->reduction_J)
      c3.reduction_J = is_reduction(
          MonomialIdeal(vars(), *witnesses->reduction_J), B_.J(),
          witnesses->r_max);
    if (c3.joint_zero || c3.reduction_I || c3.reduction_J) report.cond3 = c3;
  }

  report.cm = report.cond1;
  std::ostringstream why;
  if (report.cm) {
    why << "e10 = len(A/I) = " << report.len_I << " and e01 = len(A/J) = "
        << report.len_J
        << "; the bigraded Rees algebra is Cohen-Macaulay by the coefficient "
           "criterion (no resolution is computed)";
  } else {
    why << "not Cohen-Macaulay:";
    bool first = true;
    auto clause = [&](const std::string& text) {
      why << (first ? " " : "; ") << text;
      first = false;
    };
    if (e10 < report.len_I)
      clause("e10 = " + e10.str() + " < len(A/I) = " + report.len_I.str());
    if (e01 < report.len_J)
      clause("e01 = " + e01.str() + " < len(A/J) = " + report.len_J.str());
    if (report.e00 != 0)
      clause("e00 = " + report.e00.str() + " != 0");
  }
  report.justification = why.str();
  return report;
}

}  // namespace bhatt
