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

#ifndef BHATT_CM_HPP
#define BHATT_CM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhatt/bhattacharya.hpp"
#include "bhatt/closure.hpp"
#include "bhatt/reductions.hpp"

namespace bhatt {

struct CmOptions {
  FitConfig fit;
  ClosureConfig closure;
  std::uint64_t cell_limit = kDefaultCellLimit;
};

struct DifferenceTable {
  Window window;
  std::vector<std::vector<Integer>> values;  // P(r,s) - B(r,s), may be negative
};

struct MonotonicityResult {
  bool holds = true;
  Window window;
  std::optional<std::pair<int, int>> first_violation;
};

struct InequalityAudit {
  int dim = 0;
  Integer len_I, len_J;
  Integer e10, e01, e00;
};

/// Verdict sheet for the dim-2 Cohen-Macaulayness of the bigraded Rees
/// algebra of (I, J). cond1 is the certificate; cond2 (a finite window of
/// P = B) and cond3 (witnessed joint reduction data) are corroboration.
struct CMReport {
  BinomialPolynomial2 e_coeffs;
  Integer len_I, len_J, e00;
  bool cond1 = false;       // e10 == len(A/I) and e01 == len(A/J)
  bool cond1_prime = false; // e10 >= len(A/I) and e01 >= len(A/J)
  Window cond2_window;
  bool cond2 = false;       // P == B on the window
  struct Cond3 {
    std::optional<bool> joint_zero;
    std::optional<ReductionCertificate> reduction_I;
    std::optional<ReductionCertificate> reduction_J;
  };
  std::optional<Cond3> cond3;
  bool cm = false;
  std::string justification;
};

/// Witness material for the corroborating condition (3).
struct CMWitnesses {
  std::optional<std::pair<Monomial, Monomial>> joint;  // x in I, y in J
  std::optional<std::vector<Monomial>> reduction_I;
  std::optional<std::vector<Monomial>> reduction_J;
  int r_max = 10;
};

/// Analysis layer over a fixed pair: difference tables P - B, indirect
/// second-cohomology lengths in dimension two, coefficient inequalities, and
/// the five-way Cohen-Macaulayness report. The fit and the per-cell
/// Ratliff-Rush defects are computed once and cached.
class CmAnalysis {
 public:
  CmAnalysis(MonomialIdeal I, MonomialIdeal J, CmOptions options = {});

  int vars() const { return B_.vars(); }
  const BhattacharyaFunction& function() const { return B_; }
  const FitReport& fit_report() const;

  /// P(r, s) - B(r, s).
  Integer difference(int r, int s) const;
  DifferenceTable difference_table(const Window& window) const;

  /// lambda of the degree-(r,s) component of the top local cohomology of the
  /// bigraded Rees algebra, recovered as (P - B) + the Ratliff-Rush defect.
  /// Dimension-two only.
  Integer h2_length(int r, int s) const;

  /// Fitted e00 equals the h2 length at the origin (both reduce to P(0,0)).
  bool e00_identity_check() const;

  /// h2(r+1, s+1) <= h2(r, s) across the window.
  MonotonicityResult diagonal_monotonicity(const Window& window) const;

  /// len(A/I) >= e10 and len(A/J) >= e01 in dimension two (plus e00 on each
  /// right-hand side in dimension one). Violation throws std::logic_error:
  /// these are proven inequalities, so failing them means a bug.
  InequalityAudit inequality_audit() const;

  /// Fitted e11 against len(A/IJ) - len(A/I) - len(A/J); the equality holds
  /// exactly when the pair has joint reduction number zero. The one-sided
  /// bound e11 >= difference always holds and is asserted.
  bool e1_mixed_identity_check() const;

  CMReport jr_criterion_report(const Window& cond2_window = {0, 4, 0, 4},
                               const CMWitnesses* witnesses = nullptr) const;

 private:
  const DefectResult& defect(int r, int s) const;
  void require_dim2(const char* what) const;

  BhattacharyaFunction B_;
  CmOptions options_;
  mutable std::optional<FitReport> fit_;
  mutable std::map<std::pair<int, int>, DefectResult> defects_;
};

}  // namespace bhatt

#endif  // BHATT_CM_HPP
