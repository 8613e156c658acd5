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

#include "bhatt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bhatt/bhattacharya.hpp"
#include "bhatt/closure.hpp"
#include "bhatt/cm.hpp"
#include "bhatt/problem.hpp"
#include "bhatt/reductions.hpp"

namespace bhatt::cli {

namespace {

using json = nlohmann::ordered_json;

// Input-level failures that are not grammar errors (missing file, absent
// witness material).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw DataError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct CommonOpts {
  std::string input;
  std::string format = "text";
  std::uint64_t max_cells = kDefaultCellLimit;
};

struct FitFlags {
  std::vector<int> base{1, 1};
  int degree = -1;  // negative: use the ambient dimension
  int validate_width = 3;
  int shifts = 12;

  FitConfig config() const {
    FitConfig cfg;
    if (degree >= 0) cfg.degree = degree;
    cfg.base = {base[0], base[1]};
    cfg.validate_width = validate_width;
    cfg.max_shifts = shifts;
    return cfg;
  }
};

struct ClosureFlags {
  int k_cap = 20;
  int confirm = 2;

  ClosureConfig config() const { return {confirm, k_cap}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("input", opts.input,
                  "problem file (text or JSON), or '-' for stdin")
      ->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();
  cmd->add_option("--max-cells", opts.max_cells,
                  "staircase box cell limit for length computations")
      ->capture_default_str();
}

void add_fit_flags(CLI::App* cmd, FitFlags& flags) {
  cmd->add_option("--base", flags.base, "fit base point r0 s0")
      ->expected(2)
      ->capture_default_str();
  cmd->add_option("--degree", flags.degree,
                  "total degree of the fitted polynomial (default: ambient "
                  "dimension)");
  cmd->add_option("--validate-width", flags.validate_width,
                  "width of the exact validation band beyond the sample grid")
      ->capture_default_str();
  cmd->add_option("--shifts", flags.shifts,
                  "diagonal base shifts to try before giving up")
      ->capture_default_str();
}

void add_closure_flags(CLI::App* cmd, ClosureFlags& flags) {
  cmd->add_option("--kcap", flags.k_cap, "colon chain index cap")
      ->capture_default_str();
  cmd->add_option("--confirm", flags.confirm,
                  "consecutive equal chain values required for stabilization")
      ->capture_default_str();
}

json window_json(const Window& w) {
  return {{"r_lo", w.r_lo}, {"r_hi", w.r_hi}, {"s_lo", w.s_lo}, {"s_hi", w.s_hi}};
}

json coefficients_json(const BinomialPolynomial2& poly) {
  json list = json::array();
  for (const auto& [i, j] : coefficient_order(poly.degree()))
    list.push_back({{"i", i}, {"j", j}, {"value", poly.coeff(i, j).str()}});
  return list;
}

void render_coefficients(std::ostream& out, const BinomialPolynomial2& poly) {
  for (const auto& [i, j] : coefficient_order(poly.degree()))
    out << "e[" << i << ',' << j << "] = " << poly.coeff(i, j) << '\n';
}

void flatten_kv(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items())
      flatten_kv(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (value.is_array()) {
    size_t i = 0;
    for (const auto& v : value)
      flatten_kv(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else if (value.is_string()) {
    out << prefix << '\t' << value.get<std::string>() << '\n';
  } else {
    out << prefix << '\t' << value.dump() << '\n';
  }
}

using TextRenderer = std::function<void(std::ostream&)>;

// Every emitted format carries the same numbers: json is the source of truth
// and tsv flattens it, so only the text rendering is bespoke.
void emit_report(const json& doc, const CommonOpts& opts, std::ostream& out,
                 const TextRenderer& text,
                 const TextRenderer& grid = nullptr) {
  if (opts.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (opts.format == "tsv") {
    if (grid)
      grid(out);
    else
      flatten_kv(doc, "", out);
  } else {
    if (grid)
      grid(out);
    else
      text(out);
  }
}

void render_grid(std::ostream& out, const Window& w,
                 const std::vector<std::vector<Integer>>& values) {
  out << "r\\s";
  for (int s = w.s_lo; s <= w.s_hi; ++s) out << '\t' << s;
  out << '\n';
  for (int r = w.r_lo; r <= w.r_hi; ++r) {
    out << r;
    for (const auto& v : values[static_cast<size_t>(r - w.r_lo)])
      out << '\t' << v;
    out << '\n';
  }
}

json grid_json(const std::vector<std::vector<Integer>>& values) {
  json rows = json::array();
  for (const auto& row : values) {
    json cells = json::array();
    for (const auto& v : row) cells.push_back(v.str());
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string format_pair(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string window_text(const Window& w) {
  return "r in [" + std::to_string(w.r_lo) + ", " + std::to_string(w.r_hi) +
         "], s in [" + std::to_string(w.s_lo) + ", " + std::to_string(w.s_hi) +
         "]";
}

json certificate_json(const ReductionCertificate& cert) {
  json j = {{"holds", cert.holds}};
  if (cert.witness_r)
    j["reduction_number"] = *cert.witness_r;
  else
    j["reduction_number"] = nullptr;
  j["checked_up_to"] = cert.checked_up_to;
  return j;
}

struct CommandContext {
  CommonOpts common;
  FitFlags fit_flags;
  ClosureFlags closure_flags;
  std::vector<int> window{4, 4};
  int r = 1, s = 1, a = 1, b = 1;
  int r_max = 10;
  bool strict = false;
  bool via_witness = false;
};

int dispatch(const std::string& name, const CommandContext& ctx,
             std::istream& in, std::ostream& out);

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Bhattacharya polynomials, Ratliff-Rush closures and "
               "bigraded Rees algebra analysis for pairs of m-primary "
               "monomial ideals"};
  app.require_subcommand(1);

  std::map<std::string, CommandContext> contexts;
  auto make = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    CommandContext& ctx = contexts[name];
    add_common(cmd, ctx.common);
    return std::pair{cmd, &ctx};
  };

  {
    auto [cmd, ctx] = make("length", "length of A / I^r J^s");
    cmd->add_option("-r", ctx->r, "power of I")->capture_default_str();
    cmd->add_option("-s", ctx->s, "power of J")->capture_default_str();
  }
  {
    auto [cmd, ctx] = make("table", "table of B(r, s) over a window");
    cmd->add_option("--window", ctx->window, "upper bounds R S")
        ->expected(2)
        ->capture_default_str();
  }
  {
    auto [cmd, ctx] = make("fit", "Bhattacharya polynomial in the binomial basis");
    add_fit_flags(cmd, ctx->fit_flags);
  }
  {
    auto [cmd, ctx] = make("mixed", "mixed multiplicities e_j(I|J)");
    add_fit_flags(cmd, ctx->fit_flags);
  }
  {
    auto [cmd, ctx] = make("hilbert", "Hilbert coefficients of I alone (dim 2)");
    add_fit_flags(cmd, ctx->fit_flags);
  }
  {
    auto [cmd, ctx] = make("rr", "Ratliff-Rush closure of I^a J^b");
    cmd->add_option("-a", ctx->a, "power of I")->capture_default_str();
    cmd->add_option("-b", ctx->b, "power of J")->capture_default_str();
    add_closure_flags(cmd, ctx->closure_flags);
    cmd->add_flag("--via-witness", ctx->via_witness,
                  "colon against the certified complete-reduction witness "
                  "instead of I^k J^k");
    cmd->add_option("--rmax", ctx->r_max,
                    "reduction check bound for --via-witness")
        ->capture_default_str();
  }
  {
    auto [cmd, ctx] = make("defect", "length of (I^r J^s)~ / I^r J^s");
    cmd->add_option("-r", ctx->r, "power of I")->capture_default_str();
    cmd->add_option("-s", ctx->s, "power of J")->capture_default_str();
    add_closure_flags(cmd, ctx->closure_flags);
  }
  {
    auto [cmd, ctx] = make("reduction", "verify the reduction witnesses");
    cmd->add_option("--rmax", ctx->r_max, "largest reduction number to try")
        ->capture_default_str();
  }
  {
    auto [cmd, ctx] = make("jointred", "verify the joint reduction witness");
    (void)ctx;
    (void)cmd;
  }
  {
    auto [cmd, ctx] = make("complete", "verify the complete reduction witness");
    cmd->add_option("--rmax", ctx->r_max, "largest reduction number to try")
        ->capture_default_str();
  }
  {
    auto [cmd, ctx] = make("decomp", "verify the bidegree decomposition witness");
    (void)ctx;
    (void)cmd;
  }
  {
    auto [cmd, ctx] = make("diff", "table of P(r, s) - B(r, s) over a window");
    cmd->add_option("--window", ctx->window, "upper bounds R S")
        ->expected(2)
        ->capture_default_str();
    add_fit_flags(cmd, ctx->fit_flags);
  }
  {
    auto [cmd, ctx] = make("h2", "indirect top local cohomology length (dim 2)");
    ctx->r = ctx->s = 0;
    cmd->add_option("-r", ctx->r, "first bidegree")->capture_default_str();
    cmd->add_option("-s", ctx->s, "second bidegree")->capture_default_str();
    add_fit_flags(cmd, ctx->fit_flags);
    add_closure_flags(cmd, ctx->closure_flags);
  }
  {
    auto [cmd, ctx] = make("cmcheck",
                           "Cohen-Macaulayness of the bigraded Rees algebra "
                           "(dim 2)");
    cmd->add_option("--window", ctx->window,
                    "corroboration window upper bounds R S")
        ->expected(2)
        ->capture_default_str();
    add_fit_flags(cmd, ctx->fit_flags);
    add_closure_flags(cmd, ctx->closure_flags);
    cmd->add_option("--rmax", ctx->r_max,
                    "reduction check bound for witnessed condition (3)")
        ->capture_default_str();
    cmd->add_flag("--strict", ctx->strict,
                  "exit with status 2 when the verdict is not-CM");
  }

  try {
    // CLI11 consumes the argument vector back to front.
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, contexts.at(name), in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

namespace {

int dispatch(const std::string& name, const CommandContext& ctx,
             std::istream& in, std::ostream& out) {
  const CommonOpts& opts = ctx.common;
  ProblemSpec spec = parse_problem(load_input(opts.input, in));

  auto require = [&](const auto& optional_field, const char* what) -> const auto& {
    if (!optional_field)
      throw DataError(std::string("the input declares no ") + what);
    return *optional_field;
  };

  if (name == "length") {
    BhattacharyaFunction B(spec.I, spec.J, opts.max_cells);
    Integer value = B(ctx.r, ctx.s);
    json doc{{"command", "length"},
             {"r", ctx.r},
             {"s", ctx.s},
             {"value", value.str()}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "B(" << ctx.r << ", " << ctx.s << ") = " << value << '\n';
    });
    return kExitOk;
  }

  if (name == "table" || name == "diff") {
    Window window{0, ctx.window[0], 0, ctx.window[1]};
    std::vector<std::vector<Integer>> values;
    if (name == "table") {
      BhattacharyaFunction B(spec.I, spec.J, opts.max_cells);
      values = tabulate(B, window).values;
    } else {
      CmAnalysis an(spec.I, spec.J,
                    {ctx.fit_flags.config(), ctx.closure_flags.config(),
                     opts.max_cells});
      values = an.difference_table(window).values;
    }
    json doc{{"command", name},
             {"window", window_json(window)},
             {"values", grid_json(values)}};
    auto grid = [&](std::ostream& o) { render_grid(o, window, values); };
    emit_report(doc, opts, out, grid, grid);
    return kExitOk;
  }

  if (name == "fit") {
    BhattacharyaFunction B(spec.I, spec.J, opts.max_cells);
    FitReport report = fit(B, ctx.fit_flags.config());
    json doc{{"command", "fit"},
             {"degree", report.polynomial.degree()},
             {"base", json::array({report.base.first, report.base.second})},
             {"validated_on", window_json(report.validated_on)},
             {"postulation",
              report.postulation
                  ? json::array({report.postulation->first,
                                 report.postulation->second})
                  : json(nullptr)},
             {"coefficients", coefficients_json(report.polynomial)}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "degree: " << report.polynomial.degree() << '\n';
      o << "base: " << format_pair(report.base.first, report.base.second) << '\n';
      o << "validated: " << window_text(report.validated_on) << '\n';
      if (report.postulation)
        o << "postulation: "
          << format_pair(report.postulation->first, report.postulation->second)
          << '\n';
      else
        o << "postulation: none within the validated window\n";
      render_coefficients(o, report.polynomial);
    });
    return kExitOk;
  }

  if (name == "mixed") {
    BhattacharyaFunction B(spec.I, spec.J, opts.max_cells);
    auto values = mixed_multiplicities(B, ctx.fit_flags.config());
    json list = json::array();
    for (const auto& v : values) list.push_back(v.str());
    json doc{{"command", "mixed"}, {"values", std::move(list)}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      for (size_t j = 0; j < values.size(); ++j)
        o << "e_" << j << "(I|J) = " << values[j] << '\n';
    });
    return kExitOk;
  }

  if (name == "hilbert") {
    auto h = hilbert_fit_single(spec.I, ctx.fit_flags.config());
    json doc{{"command", "hilbert"},
             {"e0", h.e0.str()},
             {"e1", h.e1.str()},
             {"e2", h.e2.str()}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "e0 = " << h.e0 << '\n'
        << "e1 = " << h.e1 << '\n'
        << "e2 = " << h.e2 << '\n';
    });
    return kExitOk;
  }

  if (name == "rr") {
    ClosureResult result = [&] {
      if (!ctx.via_witness)
        return rr_closure(spec.I, spec.J, ctx.a, ctx.b,
                          ctx.closure_flags.config());
      const auto& pairs = require(spec.witnesses.complete, "complete witness");
      auto cert = complete_reduction_check(pairs, spec.I, spec.J, ctx.r_max);
      if (!cert.holds)
        throw std::domain_error(
            "the complete witness does not certify a reduction of I*J up to "
            "r_max = " +
            std::to_string(ctx.r_max) +
            "; the element-wise colon union would only bound the closure");
      std::vector<Monomial> ys;
      ys.reserve(pairs.size());
      for (const auto& [x, y] : pairs) ys.push_back(x * y);
      return rr_closure_via_reduction(spec.I, spec.J, ctx.a, ctx.b, ys,
                                      ctx.closure_flags.config());
    }();
    const MonomialIdeal plain =
        product(power(spec.I, ctx.a), power(spec.J, ctx.b));
    const bool strictly_larger = result.closure != plain;
    json gens = json::array();
    for (const auto& g : result.closure.generators())
      gens.push_back(format_monomial(g, spec.vars));
    json doc{{"command", "rr"},
             {"a", ctx.a},
             {"b", ctx.b},
             {"via_witness", ctx.via_witness},
             {"closure", std::move(gens)},
             {"stabilized_at", result.stabilized_at},
             {"confirmed_steps", result.confirmed_steps},
             {"capped", result.capped},
             {"strictly_larger", strictly_larger}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "closure: " << format_ideal(result.closure, spec.vars) << '\n';
      o << "stabilized_at: " << result.stabilized_at << '\n';
      o << "confirmed_steps: " << result.confirmed_steps << '\n';
      o << "capped: " << (result.capped ? "true" : "false") << '\n';
      o << "strictly_larger: " << (strictly_larger ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  if (name == "defect") {
    auto d = rr_defect(spec.I, spec.J, ctx.r, ctx.s, ctx.closure_flags.config());
    json doc{{"command", "defect"},
             {"r", ctx.r},
             {"s", ctx.s},
             {"value", d.value.str()},
             {"certified", d.certified}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "defect: " << d.value << '\n';
      o << "certified: " << (d.certified ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  if (name == "reduction") {
    if (!spec.witnesses.reduction_I && !spec.witnesses.reduction_J)
      throw DataError("the input declares no reduction witness");
    json results = json::array();
    std::ostringstream text;
    auto run_one = [&](const std::vector<Monomial>& gens,
                       const MonomialIdeal& target, const char* label) {
      MonomialIdeal K(target.vars(), gens);
      auto cert = is_reduction(K, target, ctx.r_max);
      json entry = {{"target", label},
                    {"candidate", format_ideal(K, spec.vars)}};
      entry.update(certificate_json(cert));
      results.push_back(std::move(entry));
      text << "target: " << label << '\n'
           << "candidate: " << format_ideal(K, spec.vars) << '\n'
           << "holds: " << (cert.holds ? "true" : "false") << '\n';
      if (cert.witness_r) text << "reduction_number: " << *cert.witness_r << '\n';
      text << "checked_up_to: " << cert.checked_up_to << '\n';
    };
    if (spec.witnesses.reduction_I)
      run_one(*spec.witnesses.reduction_I, spec.I, "I");
    if (spec.witnesses.reduction_J)
      run_one(*spec.witnesses.reduction_J, spec.J, "J");
    json doc{{"command", "reduction"}, {"results", std::move(results)}};
    emit_report(doc, opts, out,
                [&](std::ostream& o) { o << text.str(); });
    return kExitOk;
  }

  if (name == "jointred") {
    const auto& [x, y] = require(spec.witnesses.joint, "joint witness");
    bool zero = joint_reduction_zero(x, y, spec.I, spec.J);
    json doc{{"command", "jointred"},
             {"x", format_monomial(x, spec.vars)},
             {"y", format_monomial(y, spec.vars)},
             {"joint_reduction_zero", zero}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "x: " << format_monomial(x, spec.vars) << '\n';
      o << "y: " << format_monomial(y, spec.vars) << '\n';
      o << "joint_reduction_zero: " << (zero ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  if (name == "complete") {
    const auto& pairs = require(spec.witnesses.complete, "complete witness");
    auto cert = complete_reduction_check(pairs, spec.I, spec.J, ctx.r_max);
    json jpairs = json::array();
    json jys = json::array();
    std::string ys_text;
    for (const auto& [x, y] : pairs) {
      jpairs.push_back(json::array({format_monomial(x, spec.vars),
                                    format_monomial(y, spec.vars)}));
      std::string prod = format_monomial(x * y, spec.vars);
      jys.push_back(prod);
      if (!ys_text.empty()) ys_text += ", ";
      ys_text += prod;
    }
    json doc{{"command", "complete"}, {"pairs", std::move(jpairs)},
             {"ys", std::move(jys)}};
    doc.update(certificate_json(cert));
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "ys: " << ys_text << '\n';
      o << "holds: " << (cert.holds ? "true" : "false") << '\n';
      if (cert.witness_r) o << "reduction_number: " << *cert.witness_r << '\n';
      o << "checked_up_to: " << cert.checked_up_to << '\n';
    });
    return kExitOk;
  }

  if (name == "decomp") {
    const auto& decomp = require(spec.witnesses.decomp, "decomp witness");
    bool holds = verify_decomposition(spec.I, spec.J, decomp.target, decomp.terms);
    json terms = json::array();
    for (const auto& t : decomp.terms)
      terms.push_back({{"m", format_monomial(t.m, spec.vars)},
                       {"deg", json::array({t.a, t.b})}});
    json doc{{"command", "decomp"},
             {"target", json::array({decomp.target.first, decomp.target.second})},
             {"terms", std::move(terms)},
             {"holds", holds}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "target: " << format_pair(decomp.target.first, decomp.target.second)
        << '\n';
      o << "terms:";
      for (const auto& t : decomp.terms)
        o << ' ' << format_monomial(t.m, spec.vars) << "@(" << t.a << ','
          << t.b << ')';
      o << '\n';
      o << "holds: " << (holds ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  if (name == "h2") {
    CmAnalysis an(spec.I, spec.J,
                  {ctx.fit_flags.config(), ctx.closure_flags.config(),
                   opts.max_cells});
    Integer value = an.h2_length(ctx.r, ctx.s);
    Integer diff = an.difference(ctx.r, ctx.s);
    auto defect = rr_defect(spec.I, spec.J, ctx.r, ctx.s,
                            ctx.closure_flags.config());
    json doc{{"command", "h2"},
             {"r", ctx.r},
             {"s", ctx.s},
             {"value", value.str()},
             {"difference", diff.str()},
             {"defect", defect.value.str()},
             {"certified", defect.certified}};
    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "h2(" << ctx.r << ", " << ctx.s << ") = " << value << '\n';
      o << "difference: " << diff << '\n';
      o << "defect: " << defect.value << '\n';
      o << "certified: " << (defect.certified ? "true" : "false") << '\n';
    });
    return kExitOk;
  }

  if (name == "cmcheck") {
    CmAnalysis an(spec.I, spec.J,
                  {ctx.fit_flags.config(), ctx.closure_flags.config(),
                   opts.max_cells});
    Window window{0, ctx.window[0], 0, ctx.window[1]};
    CMWitnesses witnesses;
    witnesses.joint = spec.witnesses.joint;
    witnesses.reduction_I = spec.witnesses.reduction_I;
    witnesses.reduction_J = spec.witnesses.reduction_J;
    witnesses.r_max = ctx.r_max;
    const bool have_witnesses = spec.witnesses.joint ||
                                spec.witnesses.reduction_I ||
                                spec.witnesses.reduction_J;
    CMReport report = an.jr_criterion_report(
        window, have_witnesses ? &witnesses : nullptr);

    json doc{{"command", "cmcheck"},
             {"dimension", an.vars()},
             {"len_I", report.len_I.str()},
             {"len_J", report.len_J.str()},
             {"e00", report.e00.str()},
             {"coefficients", coefficients_json(report.e_coeffs)},
             {"cond1", report.cond1},
             {"cond1_prime", report.cond1_prime},
             {"cond2", {{"window", window_json(report.cond2_window)},
                        {"holds", report.cond2}}}};
    if (report.cond3) {
      json c3 = json::object();
      if (report.cond3->joint_zero)
        c3["joint_reduction_zero"] = *report.cond3->joint_zero;
      if (report.cond3->reduction_I)
        c3["reduction_I"] = certificate_json(*report.cond3->reduction_I);
      if (report.cond3->reduction_J)
        c3["reduction_J"] = certificate_json(*report.cond3->reduction_J);
      doc["cond3"] = std::move(c3);
    } else {
      doc["cond3"] = nullptr;
    }
    doc["verdict"] = report.cm ? "CM" : "not-CM";
    doc["justification"] = report.justification;

    emit_report(doc, opts, out, [&](std::ostream& o) {
      o << "dimension: " << an.vars() << '\n';
      o << "len(A/I) = " << report.len_I << '\n';
      o << "len(A/J) = " << report.len_J << '\n';
      render_coefficients(o, report.e_coeffs);
      o << "cond1 (e10 = len(A/I) and e01 = len(A/J)): "
        << (report.cond1 ? "true" : "false") << '\n';
      o << "cond1' (e10 >= len(A/I) and e01 >= len(A/J)): "
        << (report.cond1_prime ? "true" : "false") << '\n';
      o << "cond2 (P = B for " << window_text(report.cond2_window)
        << "): " << (report.cond2 ? "true" : "false") << '\n';
      if (report.cond3) {
        if (report.cond3->joint_zero)
          o << "cond3 joint reduction number zero: "
            << (*report.cond3->joint_zero ? "true" : "false") << '\n';
        auto describe = [&](const char* label,
                            const ReductionCertificate& cert) {
          bool le1 = cert.holds && cert.witness_r && *cert.witness_r <= 1;
          o << "cond3 r(" << label << ") <= 1: " << (le1 ? "true" : "false");
          if (cert.holds)
            o << " (reduction number " << *cert.witness_r << ")";
          else
            o << " (no reduction up to r_max)";
          o << '\n';
        };
        if (report.cond3->reduction_I)
          describe("I", *report.cond3->reduction_I);
        if (report.cond3->reduction_J)
          describe("J", *report.cond3->reduction_J);
      } else {
        o << "cond3: not evaluated (no witnesses)\n";
      }
      o << "verdict: " << (report.cm ? "CM" : "not-CM") << '\n';
      o << "justification: " << report.justification << '\n';
    });
    return !report.cm && ctx.strict ? kExitNotCm : kExitOk;
  }

  throw std::logic_error("unhandled command '" + name + "'");
}

}  // namespace

}  // namespace bhatt::cli
