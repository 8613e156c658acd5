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

#include "bhatt/problem.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bhatt {

namespace {

using json = nlohmann::ordered_json;

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

bool parse_nat(std::string_view text, int& out) {
  if (text.empty() || text.size() > 9) return false;
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

class TextParser {
 public:
  explicit TextParser(std::string_view input) : input_(input) {}

  ProblemSpec parse() {
    std::istringstream stream{std::string(input_)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos)
        raw.erase(hash);
      auto tokens = tokenize(raw);
      if (tokens.empty()) continue;
      handle_line(line_no, tokens);
    }
    if (vars_.empty())
      throw ParseError(line_no + 1, 1, "missing 'ring' declaration");
    if (!I_)
      throw ParseError(line_no + 1, 1, "missing 'I:' ideal declaration");
    MonomialIdeal J = J_ ? *J_ : MonomialIdeal::unit(n());
    return ProblemSpec{vars_, *I_, std::move(J), witnesses_};
  }

 private:
  int n() const { return static_cast<int>(vars_.size()); }

  void handle_line(int line, const std::vector<Token>& tokens) {
    const std::string& head = tokens[0].text;
    if (head == "ring")
      parse_ring(line, tokens);
    else if (head == "I:")
      parse_ideal(line, tokens, I_, "I");
    else if (head == "J:")
      parse_ideal(line, tokens, J_, "J");
    else if (head == "witness")
      parse_witness(line, tokens);
    else
      throw ParseError(line, tokens[0].column,
                       "expected 'ring', 'I:', 'J:' or 'witness', got '" +
                           head + "'");
  }

  void parse_ring(int line, const std::vector<Token>& tokens) {
    if (!vars_.empty())
      throw ParseError(line, tokens[0].column, "duplicate 'ring' line");
    if (tokens.size() < 2)
      throw ParseError(line, tokens[0].column, "ring needs at least one variable");
    for (size_t i = 1; i < tokens.size(); ++i) {
      const auto& t = tokens[i];
      for (char c : t.text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError(line, t.column,
                           "invalid variable name '" + t.text + "'");
      if (std::isdigit(static_cast<unsigned char>(t.text[0])))
        throw ParseError(line, t.column,
                         "variable name cannot start with a digit");
      if (index_.count(t.text))
        throw ParseError(line, t.column, "duplicate variable '" + t.text + "'");
      index_[t.text] = static_cast<int>(vars_.size());
      vars_.push_back(t.text);
    }
  }

  void require_ring(int line, int column) const {
    if (vars_.empty())
      throw ParseError(line, column, "'ring' line must come first");
  }

  Monomial parse_monomial(int line, const Token& token) const {
    return parse_monomial_text(line, token.column, token.text);
  }

  Monomial parse_monomial_text(int line, int column, std::string_view text) const {
    require_ring(line, column);
    std::vector<int> exp(static_cast<size_t>(n()), 0);
    if (text.empty()) throw ParseError(line, column, "empty monomial");
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find('*', pos);
      std::string_view factor = text.substr(
          pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      int factor_col = column + static_cast<int>(pos);
      if (factor.empty())
        throw ParseError(line, factor_col, "empty factor in monomial");
      if (factor == "1") {
        // contributes nothing
      } else {
        std::string name;
        std::string_view exp_part;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
          name = std::string(factor.substr(0, caret));
          exp_part = factor.substr(caret + 1);
        } else {
          name = std::string(factor);
        }
        auto it = index_.find(name);
        if (it == index_.end())
          throw ParseError(line, factor_col, "unknown variable '" + name + "'");
        int e = 1;
        if (!exp_part.empty() || factor.find('^') != std::string_view::npos) {
          if (!exp_part.empty() && exp_part[0] == '-')
            throw ParseError(line, factor_col,
                             "negative exponent in '" + std::string(factor) + "'");
          if (!parse_nat(exp_part, e))
            throw ParseError(line, factor_col,
                             "malformed exponent in '" + std::string(factor) + "'");
        }
        exp[static_cast<size_t>(it->second)] += e;
      }
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return Monomial(std::move(exp));
  }

  void parse_ideal(int line, const std::vector<Token>& tokens,
                   std::optional<MonomialIdeal>& slot, const char* name) {
    require_ring(line, tokens[0].column);
    if (slot)
      throw ParseError(line, tokens[0].column,
                       std::string("duplicate '") + name + ":' line");
    std::vector<Monomial> gens;
    for (size_t i = 1; i < tokens.size(); ++i)
      gens.push_back(parse_monomial(line, tokens[i]));
    slot = MonomialIdeal(n(), std::move(gens));
  }

  // Splits "mon@I" / "mon@J"; an untagged token reports no tag.
  std::pair<std::string, std::optional<char>> split_tag(
      int line, const Token& token) const {
    auto at = token.text.rfind('@');
    if (at == std::string::npos) return {token.text, std::nullopt};
    std::string suffix = token.text.substr(at + 1);
    if (suffix != "I" && suffix != "J")
      throw ParseError(line, token.column,
                       "expected '@I' or '@J' tag in '" + token.text + "'");
    return {token.text.substr(0, at), suffix[0]};
  }

  std::pair<int, int> parse_degree_pair(int line, int column,
                                        std::string_view text) const {
    if (text.size() < 5 || text.front() != '(' || text.back() != ')')
      throw ParseError(line, column,
                       "expected a degree pair '(a,b)', got '" +
                           std::string(text) + "'");
    auto body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw ParseError(line, column, "degree pair needs a comma");
    int a = 0, b = 0;
    if (!parse_nat(body.substr(0, comma), a) ||
        !parse_nat(body.substr(comma + 1), b))
      throw ParseError(line, column,
                       "degree pair entries must be non-negative integers");
    return {a, b};
  }

  void parse_witness(int line, const std::vector<Token>& tokens) {
    require_ring(line, tokens[0].column);
    if (tokens.size() < 2)
      throw ParseError(line, tokens[0].column, "witness kind missing");
    const std::string& kind = tokens[1].text;
    if (kind == "reduction:")
      parse_reduction_witness(line, tokens);
    else if (kind == "joint:")
      parse_joint_witness(line, tokens);
    else if (kind == "complete:")
      parse_complete_witness(line, tokens);
    else if (kind == "decomp:")
      parse_decomp_witness(line, tokens);
    else
      throw ParseError(line, tokens[1].column,
                       "unknown witness kind '" + kind + "'");
  }

  void parse_reduction_witness(int line, const std::vector<Token>& tokens) {
    if (tokens.size() < 3)
      throw ParseError(line, tokens[1].column, "reduction witness is empty");
    std::optional<char> target;
    std::vector<Monomial> gens;
    for (size_t i = 2; i < tokens.size(); ++i) {
      auto [text, tag] = split_tag(line, tokens[i]);
      char resolved = tag.value_or('I');
      if (target && *target != resolved)
        throw ParseError(line, tokens[i].column,
                         "mixed '@I'/'@J' targets in one reduction witness");
      target = resolved;
      gens.push_back(parse_monomial_text(line, tokens[i].column, text));
    }
    auto& slot = *target == 'I' ? witnesses_.reduction_I : witnesses_.reduction_J;
    if (slot)
      throw ParseError(line, tokens[0].column,
                       std::string("duplicate reduction witness for ") +
                           *target);
    slot = std::move(gens);
  }

  void parse_joint_witness(int line, const std::vector<Token>& tokens) {
    if (witnesses_.joint)
      throw ParseError(line, tokens[0].column, "duplicate joint witness");
    if (tokens.size() != 4)
      throw ParseError(line, tokens[1].column,
                       "joint witness needs exactly two tagged monomials");
    std::optional<Monomial> x, y;
    for (size_t i = 2; i < 4; ++i) {
      auto [text, tag] = split_tag(line, tokens[i]);
      if (!tag)
        throw ParseError(line, tokens[i].column,
                         "joint witness elements need '@I' or '@J' tags");
      auto m = parse_monomial_text(line, tokens[i].column, text);
      auto& slot = *tag == 'I' ? x : y;
      if (slot)
        throw ParseError(line, tokens[i].column,
                         std::string("two elements tagged '@") + *tag + "'");
      slot = std::move(m);
    }
    witnesses_.joint = {std::move(*x), std::move(*y)};
  }

  void parse_complete_witness(int line, const std::vector<Token>& tokens) {
    if (witnesses_.complete)
      throw ParseError(line, tokens[0].column, "duplicate complete witness");
    if (tokens.size() < 3)
      throw ParseError(line, tokens[1].column, "complete witness is empty");
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (size_t i = 2; i < tokens.size(); ++i) {
      const auto& t = tokens[i];
      if (t.text.size() < 5 || t.text.front() != '(' || t.text.back() != ')')
        throw ParseError(line, t.column,
                         "expected an element pair '(m1,m2)', got '" + t.text +
                             "'");
      std::string body = t.text.substr(1, t.text.size() - 2);
      auto comma = body.find(',');
      if (comma == std::string::npos)
        throw ParseError(line, t.column, "element pair needs a comma");
      pairs.emplace_back(
          parse_monomial_text(line, t.column + 1, body.substr(0, comma)),
          parse_monomial_text(line, t.column + static_cast<int>(comma) + 2,
                              body.substr(comma + 1)));
    }
    witnesses_.complete = std::move(pairs);
  }

  void parse_decomp_witness(int line, const std::vector<Token>& tokens) {
    if (witnesses_.decomp)
      throw ParseError(line, tokens[0].column, "duplicate decomp witness");
    if (tokens.size() < 5 || tokens[3].text != "=")
      throw ParseError(line, tokens[1].column,
                       "decomp witness looks like: (a,b) = m@(a1,b1) ...");
    Witnesses::Decomp decomp;
    decomp.target = parse_degree_pair(line, tokens[2].column, tokens[2].text);
    for (size_t i = 4; i < tokens.size(); ++i) {
      const auto& t = tokens[i];
      auto at = t.text.rfind('@');
      if (at == std::string::npos)
        throw ParseError(line, t.column,
                         "decomp term needs the form m@(a,b), got '" + t.text +
                             "'");
      auto m = parse_monomial_text(line, t.column, t.text.substr(0, at));
      auto [a, b] = parse_degree_pair(line, t.column + static_cast<int>(at) + 1,
                                      std::string_view(t.text).substr(at + 1));
      decomp.terms.push_back({std::move(m), a, b});
    }
    witnesses_.decomp = std::move(decomp);
  }

  std::string_view input_;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  std::optional<MonomialIdeal> I_, J_;
  Witnesses witnesses_;
};

Monomial monomial_from_json(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string("structured input: ") + what +
                     " must be an exponent array of length " + std::to_string(n));
  std::vector<int> exp;
  exp.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError(std::string("structured input: ") + what +
                       " has a non-integer or negative exponent");
    exp.push_back(v.get<int>());
  }
  return Monomial(std::move(exp));
}

MonomialIdeal ideal_from_json(const json& j, int n, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string("structured input: ") + what +
                     " must be an array of exponent arrays");
  std::vector<Monomial> gens;
  gens.reserve(j.size());
  for (const auto& g : j) gens.push_back(monomial_from_json(g, n, what));
  return MonomialIdeal(n, std::move(gens));
}

json monomial_to_json(const Monomial& m) {
  json a = json::array();
  for (int e : m.exponents()) a.push_back(e);
  return a;
}

json ideal_to_json(const MonomialIdeal& I) {
  json a = json::array();
  for (const auto& g : I.generators()) a.push_back(monomial_to_json(g));
  return a;
}

}  // namespace

ProblemSpec parse_problem_text(std::string_view input) {
  return TextParser(input).parse();
}

ProblemSpec parse_problem_json(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::exception& e) {
    throw ParseError(std::string("structured input: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("structured input: top level must be an object");
  if (!doc.contains("vars") || !doc["vars"].is_array() || doc["vars"].empty())
    throw ParseError("structured input: 'vars' must be a non-empty array");

  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string())
      throw ParseError("structured input: variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
    throw ParseError("structured input: duplicate variable names");
  const int n = static_cast<int>(vars.size());

  if (!doc.contains("I"))
    throw ParseError("structured input: missing ideal 'I'");
  MonomialIdeal I = ideal_from_json(doc["I"], n, "ideal I");
  MonomialIdeal J = doc.contains("J") ? ideal_from_json(doc["J"], n, "ideal J")
                                      : MonomialIdeal::unit(n);

  Witnesses w;
  if (doc.contains("witnesses")) {
    const json& jw = doc["witnesses"];
    if (!jw.is_object())
      throw ParseError("structured input: 'witnesses' must be an object");
    if (jw.contains("reduction_I")) {
      std::vector<Monomial> gens;
      for (const auto& g : jw["reduction_I"])
        gens.push_back(monomial_from_json(g, n, "reduction_I"));
      w.reduction_I = std::move(gens);
    }
    if (jw.contains("reduction_J")) {
      std::vector<Monomial> gens;
      for (const auto& g : jw["reduction_J"])
        gens.push_back(monomial_from_json(g, n, "reduction_J"));
      w.reduction_J = std::move(gens);
    }
    if (jw.contains("joint")) {
      const json& jj = jw["joint"];
      if (!jj.is_object() || !jj.contains("I") || !jj.contains("J"))
        throw ParseError(
            "structured input: 'joint' must be {\"I\": [...], \"J\": [...]}");
      w.joint = {monomial_from_json(jj["I"], n, "joint I-element"),
                 monomial_from_json(jj["J"], n, "joint J-element")};
    }
    if (jw.contains("complete")) {
      std::vector<std::pair<Monomial, Monomial>> pairs;
      for (const auto& p : jw["complete"]) {
        if (!p.is_array() || p.size() != 2)
          throw ParseError(
              "structured input: 'complete' entries must be pairs");
        pairs.emplace_back(monomial_from_json(p[0], n, "complete pair"),
                           monomial_from_json(p[1], n, "complete pair"));
      }
      w.complete = std::move(pairs);
    }
    if (jw.contains("decomp")) {
      const json& jd = jw["decomp"];
      if (!jd.is_object() || !jd.contains("target") || !jd.contains("terms") ||
          !jd["target"].is_array() || jd["target"].size() != 2)
        throw ParseError(
            "structured input: 'decomp' must be {\"target\": [a,b], "
            "\"terms\": [...]}");
      Witnesses::Decomp d;
      d.target = {jd["target"][0].get<int>(), jd["target"][1].get<int>()};
      if (d.target.first < 0 || d.target.second < 0)
        throw ParseError("structured input: decomp target must be non-negative");
      for (const auto& t : jd["terms"]) {
        if (!t.is_object() || !t.contains("m") || !t.contains("deg") ||
            !t["deg"].is_array() || t["deg"].size() != 2)
          throw ParseError(
              "structured input: decomp terms must be {\"m\": [...], "
              "\"deg\": [a,b]}");
        d.terms.push_back({monomial_from_json(t["m"], n, "decomp term"),
                           t["deg"][0].get<int>(), t["deg"][1].get<int>()});
      }
      w.decomp = std::move(d);
    }
  }
  return ProblemSpec{std::move(vars), std::move(I), std::move(J), std::move(w)};
}

ProblemSpec parse_problem(std::string_view input) {
  for (char c : input) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_problem_json(input) : parse_problem_text(input);
  }
  throw ParseError("empty input");
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != m.vars())
    throw std::invalid_argument("variable name list does not match monomial");
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[static_cast<size_t>(i)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

std::string emit_text(const ProblemSpec& spec) {
  std::ostringstream out;
  out << "ring";
  for (const auto& v : spec.vars) out << ' ' << v;
  out << '\n';

  auto gens_line = [&](const char* name, const MonomialIdeal& ideal) {
    out << name << ':';
    for (const auto& g : ideal.generators())
      out << ' ' << format_monomial(g, spec.vars);
    out << '\n';
  };
  gens_line("I", spec.I);
  if (!spec.J.is_unit()) gens_line("J", spec.J);

  const auto& w = spec.witnesses;
  if (w.reduction_I) {
    out << "witness reduction:";
    for (const auto& m : *w.reduction_I)
      out << ' ' << format_monomial(m, spec.vars);
    out << '\n';
  }
  if (w.reduction_J) {
    out << "witness reduction:";
    for (const auto& m : *w.reduction_J)
      out << ' ' << format_monomial(m, spec.vars) << "@J";
    out << '\n';
  }
  if (w.joint)
    out << "witness joint: " << format_monomial(w.joint->first, spec.vars)
        << "@I " << format_monomial(w.joint->second, spec.vars) << "@J\n";
  if (w.complete) {
    out << "witness complete:";
    for (const auto& [a, b] : *w.complete)
      out << " (" << format_monomial(a, spec.vars) << ','
          << format_monomial(b, spec.vars) << ')';
    out << '\n';
  }
  if (w.decomp) {
    out << "witness decomp: (" << w.decomp->target.first << ','
        << w.decomp->target.second << ") =";
    for (const auto& t : w.decomp->terms)
      out << ' ' << format_monomial(t.m, spec.vars) << "@(" << t.a << ','
          << t.b << ')';
    out << '\n';
  }
  return out.str();
}

std::string emit_json(const ProblemSpec& spec) {
  json doc;
  doc["vars"] = spec.vars;
  doc["I"] = ideal_to_json(spec.I);
  doc["J"] = ideal_to_json(spec.J);
  const auto& w = spec.witnesses;
  if (!w.empty()) {
    json jw = json::object();
    if (w.reduction_I) {
      json a = json::array();
      for (const auto& m : *w.reduction_I) a.push_back(monomial_to_json(m));
      jw["reduction_I"] = std::move(a);
    }
    if (w.reduction_J) {
      json a = json::array();
      for (const auto& m : *w.reduction_J) a.push_back(monomial_to_json(m));
      jw["reduction_J"] = std::move(a);
    }
    if (w.joint)
      jw["joint"] = {{"I", monomial_to_json(w.joint->first)},
                     {"J", monomial_to_json(w.joint->second)}};
    if (w.complete) {
      json a = json::array();
      for (const auto& [x, y] : *w.complete)
        a.push_back(json::array({monomial_to_json(x), monomial_to_json(y)}));
      jw["complete"] = std::move(a);
    }
    if (w.decomp) {
      json terms = json::array();
      for (const auto& t : w.decomp->terms)
        terms.push_back({{"m", monomial_to_json(t.m)},
                         {"deg", json::array({t.a, t.b})}});
      jw["decomp"] = {{"target", json::array({w.decomp->target.first,
                                              w.decomp->target.second})},
                      {"terms", std::move(terms)}};
    }
    doc["witnesses"] = std::move(jw);
  }
  return doc.dump(2) + "\n";
}

}  // namespace bhatt
