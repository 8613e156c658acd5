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

#ifndef BHATT_PROBLEM_HPP
#define BHATT_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bhatt/ideal.hpp"
#include "bhatt/reductions.hpp"

namespace bhatt {

/// Witness material carried alongside an ideal pair: candidates this tool
/// verifies, never searches for.
struct Witnesses {
  std::optional<std::vector<Monomial>> reduction_I;
  std::optional<std::vector<Monomial>> reduction_J;
  std::optional<std::pair<Monomial, Monomial>> joint;  // element of I, element of J
  std::optional<std::vector<std::pair<Monomial, Monomial>>> complete;

  struct Decomp {
    std::pair<int, int> target{1, 1};
    std::vector<DecompTerm> terms;
    friend bool operator==(const Decomp&, const Decomp&) = default;
  };
  std::optional<Decomp> decomp;

  bool empty() const {
    return !reduction_I && !reduction_J && !joint && !complete && !decomp;
  }
  friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

/// A parsed problem: named variables, the ideal pair (J defaults to the unit
/// ideal), and optional witnesses.
struct ProblemSpec {
  std::vector<std::string> vars;
  MonomialIdeal I;
  MonomialIdeal J;
  Witnesses witnesses;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses either input format, deciding by the first non-space character
/// ('{' selects the structured JSON form).
ProblemSpec parse_problem(std::string_view input);

ProblemSpec parse_problem_text(std::string_view input);
ProblemSpec parse_problem_json(std::string_view input);

std::string emit_text(const ProblemSpec& spec);
std::string emit_json(const ProblemSpec& spec);

/// "x^2*y^4" style rendering; the unit monomial prints as "1".
std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars);

/// Comma-separated generators in canonical order; the zero ideal prints "0".
std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& vars);

}  // namespace bhatt

#endif  // BHATT_PROBLEM_HPP
