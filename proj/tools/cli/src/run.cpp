#include "eulerode_cli/run.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerode/classical.hpp"
#include "eulerode/manybody.hpp"
#include "eulerode/solver.hpp"
#include "eulerode/spectral.hpp"
#include "eulerode_cli/elaborate.hpp"
#include "eulerode_cli/emit.hpp"

namespace eulerode::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Resonance:
    case ErrorKind::ResolventPole:
      return kResonance;
    case ErrorKind::DegenerateEigenvalue:
      return kDegenerate;
    case ErrorKind::ResidualNonzero:
    case ErrorKind::NotTriangular:
    case ErrorKind::NotProportional:
      return kResidual;
    default:
      return kInvalid;
  }
}

namespace {

inline const std::string kSymbolicBeta = "b";

enum class Format { Text, Json, Latex };

struct Common {
  std::string format = "json";
  int max_order = kDefaultMaxOrder;

  Format fmt() const {
    if (format == "text") return Format::Text;
    if (format == "latex") return Format::Latex;
    return Format::Json;
  }
};

int env_max_order() {
  if (const char* v = std::getenv("EULERODE_MAX_ORDER")) {
    try {
      const int k = std::stoi(v);
      if (k >= 1) return k;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string("EULERODE_MAX_ORDER must be a positive integer, got '") + v + "'");
  }
  return kDefaultMaxOrder;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidArgument, what + ": '" + text + "' is not a rational number");
  }
}

std::map<std::string, Rational> parse_assignments(const std::vector<std::string>& items, const std::string& what) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::InvalidArgument, what + " expects name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational_arg(item.substr(eq + 1), what);
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json resonance_list(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto k : v) a.push_back(k);
  return a;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string op;
  int premultiply = 0;
  int differentiate = 0;
  std::string lambda;
  std::vector<std::string> bind;
  std::string free;
};

LinDiffOp build_operator(const std::string& src, const std::vector<std::string>& bind, const std::string& free,
                         int pre, int diff) {
  Bindings b;
  b.values = parse_assignments(bind, "--bind");
  if (!free.empty()) b.free = free;
  LinDiffOp op = parse_and_elaborate(src, b);
  if (pre > 0) op = premultiply(op, pre);
  if (diff > 0) op = differentiate_eq(op, diff);
  return op;
}

int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out) {
  const LinDiffOp op = build_operator(a.op, a.bind, a.free, a.premultiply, a.differentiate);
  const DegreeSplit split = degree_split(op);

  std::vector<Rational> lambdas;
  if (!a.lambda.empty()) {
    lambdas.push_back(parse_rational_arg(a.lambda, "--lambda"));
  } else {
    lambdas = indicial_roots(split.euler).roots;
    if (lambdas.empty())
      throw Error(ErrorKind::InvalidArgument, "F(D) = " + split.euler.str() + " has no rational roots");
  }

  std::vector<SolveReport> reports;
  for (const auto& l : lambdas) reports.push_back(master_solve(op, l, c.max_order));

  if (c.fmt() == Format::Json) {
    Json docs = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      Json meta;
      meta["operator"] = op.str();
      meta["euler_part"] = r.euler.str();
      meta["lambda"] = lambdas[i].str();
      meta["iterations"] = r.iterations_used;
      meta["resonances_hit"] = resonance_list(r.resonances_hit);
      if (auto p = op.parameter_name()) meta["parameter"] = *p;
      docs.push_back(solution_json(r.solution, std::move(meta)));
    }
    emit(out, docs.size() == 1 ? docs.front() : docs);
  } else if (c.fmt() == Format::Latex) {
    out << "L = " << latex_operator(op) << "\\\\\n";
    out << "F(D) = " << latex_euler(split.euler) << "\\\\\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
      out << "y_{" << lambdas[i].str() << "} = " << latex_series(reports[i].solution) << "\\\\\n";
  } else {
    out << "operator: " << op.str() << "\n";
    out << "F(D): " << split.euler.str() << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << "lambda = " << lambdas[i].str() << ": " << r.solution.str() << "  ["
          << (r.status == SolveStatus::Terminated ? "terminated" : "truncated") << ", " << r.iterations_used
          << " iterations]\n";
    }
  }
  return kOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string op;
  std::vector<std::string> bind;
  std::string free;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  std::stringstream buf;
  if (a.file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(a.file);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + a.file + "'");
    buf << in.rdbuf();
  }
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("solution file is not JSON: ") + e.what());
  }
  std::vector<Json> docs;
  if (doc.is_array()) docs.assign(doc.begin(), doc.end());
  else docs.push_back(doc);

  std::string free = a.free;
  if (free.empty())
    for (const auto& d : docs)
      if (d.contains("meta") && d["meta"].contains("parameter")) free = d["meta"]["parameter"].get<std::string>();
  const LinDiffOp op = build_operator(a.op, a.bind, free, 0, 0);

  Json results = Json::array();
  bool ok = true;
  for (const auto& d : docs) {
    const GeneralizedSeries s = series_from_json(d);
    const GeneralizedSeries r = residual(op, s);
    Json entry;
    entry["base_exponent"] = s.base().str();
    entry["status"] = s.is_exact() ? "terminated" : "truncated";
    entry["verified"] = r.is_zero();
    if (!r.is_zero()) {
      ok = false;
      entry["first_bad_offset"] = *r.min_offset();
      entry["residual_coeff"] = r.coeff(*r.min_offset()).str();
      err << "error: residual nonzero at x^(" << (r.base() + Rational(static_cast<long>(*r.min_offset()))).str()
          << "): " << r.coeff(*r.min_offset()).str() << "\n";
    }
    results.push_back(std::move(entry));
  }
  if (c.fmt() == Format::Json) emit(out, results.size() == 1 ? results.front() : results);
  else out << (ok ? "verified" : "residual nonzero") << "\n";
  return ok ? kOk : kResidual;
}

// --- classical / table --------------------------------------------------------

struct ClassicalArgs {
  std::string family;
  int n = 0;
  std::vector<std::string> params;
  std::string branch = "default";
};

FamilySpec make_spec(const std::string& family, int n, const std::map<std::string, Rational>& params,
                     const std::string& branch) {
  FamilySpec s;
  auto f = family_from_string(family);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
  s.family = *f;
  s.n = n;
  for (const auto& name : required_parameters(s.family))
    if (auto it = params.find(name); it != params.end()) s.params[name] = it->second;
  // Bessel rows are indexed by their order.
  if (s.family == Family::Bessel && !s.params.count("nu")) s.params["nu"] = Rational(n);
  if (branch == "ascending") s.branch = Branch::Ascending;
  else if (branch == "descending") s.branch = Branch::Descending;
  else if (branch == "default") s.branch = Branch::Default;
  else throw Error(ErrorKind::InvalidArgument, "unknown branch '" + branch + "'");
  s.validate();
  return s;
}

struct ClassicalRow {
  FamilySpec spec;
  LinDiffOp op;
  EulerPoly F;
  ExpForm form;
  GeneralizedSeries closed;
  Coeff to_standard;
};

// closed form cross-checked against master_solve and the reference oracle.
ClassicalRow classical_row(const FamilySpec& spec, int order) {
  ClassicalRow r{spec, build_equation(spec), {}, exp_form(spec), closed_form(spec, order), Coeff(1)};
  r.F = degree_split(r.op).euler;
  const SolveReport rep = master_solve(solving_equation(spec), anchor_exponent(spec), order);
  match_constant(rep.solution, r.closed);
  r.to_standard = match_constant(r.closed, oracle(spec, order));
  return r;
}

Json params_json(const FamilySpec& s) {
  Json p = Json::object();
  for (const auto& [k, v] : s.params) p[k] = v.str();
  return p;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Ascending: return "ascending";
    case Branch::Descending: return "descending";
    default: return "default";
  }
}

int cmd_classical(const ClassicalArgs& a, const Common& c, std::ostream& out) {
  const FamilySpec spec = make_spec(a.family, a.n, parse_assignments(a.params, "--param"), a.branch);
  const ClassicalRow r = classical_row(spec, c.max_order);
  if (c.fmt() == Format::Json) {
    Json meta;
    meta["family"] = to_string(spec.family);
    meta["n"] = spec.n;
    meta["params"] = params_json(spec);
    meta["branch"] = branch_name(spec.branch);
    meta["operator"] = r.op.str();
    meta["euler_part"] = r.F.str();
    meta["exp_form"] = r.form.str();
    meta["standard_scale"] = r.to_standard.str();
    emit(out, solution_json(r.closed, std::move(meta)));
  } else if (c.fmt() == Format::Latex) {
    out << to_string(spec.family) << " & $" << latex_operator(r.op) << "$ & $" << latex_euler(r.F) << "$ & $"
        << latex_exp_form(r.form) << "$ \\\\\n";
  } else {
    out << "family: " << to_string(spec.family) << "\n";
    out << "operator: " << r.op.str() << "\n";
    out << "F(D): " << r.F.str() << "\n";
    out << "closed form: " << r.form.str() << "\n";
    out << "solution: " << r.closed.str() << "\n";
    out << "standard normalization: " << r.to_standard.str() << " * solution\n";
  }
  return kOk;
}

struct TableArgs {
  int n = 3;
  std::vector<std::string> params;
};

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out) {
  std::map<std::string, Rational> params{
      {"alpha", Rational(1, 2)}, {"beta", Rational(2)}, {"gamma", Rational(3, 2)}, {"lambda", Rational(1)}, {"nu", Rational(1)}};
  for (const auto& [k, v] : parse_assignments(a.params, "--param")) params[k] = v;

  std::vector<ClassicalRow> rows;
  for (Family f : all_families()) rows.push_back(classical_row(make_spec(to_string(f), a.n, params, "default"), c.max_order));

  if (c.fmt() == Format::Json) {
    Json doc = Json::array();
    for (const auto& r : rows) {
      Json meta;
      meta["family"] = to_string(r.spec.family);
      meta["n"] = r.spec.n;
      meta["params"] = params_json(r.spec);
      meta["operator"] = r.op.str();
      meta["euler_part"] = r.F.str();
      meta["exp_form"] = r.form.str();
      doc.push_back(solution_json(r.closed, std::move(meta)));
    }
    emit(out, doc);
  } else if (c.fmt() == Format::Text) {
    for (const auto& r : rows)
      out << to_string(r.spec.family) << " | " << r.op.str() << " | " << r.F.str() << " | " << r.form.str() << "\n";
  } else {
    out << "\\begin{tabular}{llll}\n\\hline\n";
    out << "Family & Operator & $F(D)$ & Solution \\\\\n\\hline\n";
    for (const auto& r : rows)
      out << to_string(r.spec.family) << " & $" << latex_operator(r.op) << "$ & $" << latex_euler(r.F) << "$ & $"
          << latex_exp_form(r.form) << "$ \\\\\n";
    out << "\\hline\n\\end{tabular}\n";
  }
  return kOk;
}

// --- spectral -------------------------------------------------------------

struct QesArgs {
  int n = 0;
  std::string g = "1";
};

int cmd_qes(const QesArgs& a, const Common& c, std::ostream& out) {
  if (a.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be nonnegative");
  const Rational g = parse_rational_arg(a.g, "--g");
  const QesResult r = sextic_qes(a.n, g, std::max(c.max_order, a.n + 3));
  if (c.fmt() == Format::Json) {
    Json doc;
    doc["n"] = r.n;
    doc["g"] = r.g.str();
    doc["alpha"] = r.alpha.str();
    doc["gamma"] = r.gamma.str();
    doc["gauge"] = r.gauge();
    doc["termination_poly"] = r.termination_poly.str();
    Json spec = Json::array();
    for (const auto& e : r.spectrum) spec.push_back(e.str());
    doc["spectrum"] = std::move(spec);
    Json efs = Json::array();
    for (const auto& e : r.eigenfunctions)
      efs.push_back(Json{{"energy", e.energy.str()}, {"solution", solution_json(e.polynomial)}});
    doc["eigenfunctions"] = std::move(efs);
    emit(out, doc);
  } else if (c.fmt() == Format::Latex) {
    for (const auto& e : r.eigenfunctions)
      out << "E = " << latex_coeff(e.energy) << ": \\psi = " << latex_series(e.polynomial) << "\\,"
          << r.gauge() << "\\\\\n";
  } else {
    out << "alpha = " << r.alpha.str() << ", gauge " << r.gauge() << "\n";
    out << "termination polynomial: " << r.termination_poly.str() << "\n";
    for (const auto& e : r.eigenfunctions) out << "E = " << e.energy.str() << ": " << e.polynomial.str() << "\n";
  }
  return kOk;
}

struct AnharmonicArgs {
  std::string alpha = "1";
  std::string beta = "1";
  int order = 16;
};

int cmd_anharmonic(const AnharmonicArgs& a, const Common& c, std::ostream& out) {
  const AnharmonicResult r =
      anharmonic_approx(parse_rational_arg(a.alpha, "--alpha"), parse_rational_arg(a.beta, "--beta"), a.order);
  Json approx_block;
  approx_block["note"] = "approximate";
  approx_block["E0"] = r.root_selected ? Json(approx(r.E0)) : Json(nullptr);
  approx_block["mu"] = r.root_selected ? Json(approx(r.mu)) : Json(nullptr);
  approx_block["nu"] = r.root_selected ? Json(approx(r.nu)) : Json(nullptr);
  approx_block["method"] = r.method == RootMethod::ClosedForm ? "closed-form" : "bisection";
  approx_block["complex_intermediate"] = r.complex_intermediate;
  approx_block["closed_form_root"] = approx(r.closed_form_root);
  approx_block["bisection_root"] = approx(r.bisection_root);
  Json roots = Json::array();
  for (double x : r.real_roots) roots.push_back(approx(x));
  approx_block["real_roots"] = std::move(roots);

  if (c.fmt() == Format::Json) {
    Json doc;
    doc["alpha"] = r.alpha.str();
    doc["beta"] = r.beta.str();
    doc["cubic"] = r.cubic.str();
    doc["mu_of_E"] = r.mu_of_E.str();
    doc["nu_of_E"] = r.nu_of_E.str();
    doc["series"] = solution_json(r.series, Json{{"parameter", kEnergy}});
    doc["approximate"] = std::move(approx_block);
    emit(out, doc);
  } else {
    out << "cubic: " << r.cubic.str() << " = 0\n";
    out << "mu(E) = " << r.mu_of_E.str() << ", nu(E) = " << r.nu_of_E.str() << "\n";
    if (r.root_selected) {
      out << "E0 ~ " << approx(r.E0) << "  mu ~ " << approx(r.mu) << "  nu ~ " << approx(r.nu) << "\n";
    } else {
      out << "no root selected; real roots:";
      for (double x : r.real_roots) out << " " << approx(x);
      out << "\n";
    }
  }
  return kOk;
}

// --- many-body --------------------------------------------------------------

struct ManyBodyArgs {
  std::string partition;
  int nvars = 0;
  std::string beta;
  bool symbolic = false;
};

Coeff beta_of(const ManyBodyArgs& a) {
  if (a.symbolic && !a.beta.empty())
    throw Error(ErrorKind::InvalidArgument, "--beta and --symbolic-beta are mutually exclusive");
  if (a.symbolic) return Coeff::parameter(kSymbolicBeta);
  if (a.beta.empty()) throw Error(ErrorKind::InvalidArgument, "one of --beta or --symbolic-beta is required");
  return parse_rational_arg(a.beta, "--beta");
}

int cmd_jack(const ManyBodyArgs& a, const Common& c, std::ostream& out) {
  if (a.nvars < 1) throw Error(ErrorKind::InvalidArgument, "--nvars must be positive");
  const Coeff beta = beta_of(a);
  const JackResult j = jack(Partition::parse(a.partition), a.nvars, beta);
  if (c.fmt() == Format::Json) {
    Json doc;
    doc["partition"] = j.lambda.str();
    doc["nvars"] = j.nvars;
    doc["beta"] = beta.str();
    doc["eigenvalue_shift"] = j.eigenvalue_shift.str();
    Json coeffs = Json::array();
    for (const auto& mu : j.basis)
      if (auto it = j.coefficients.find(mu); it != j.coefficients.end())
        coeffs.push_back(Json{{"partition", mu.str()}, {"coeff", it->second.str()}});
    doc["coefficients"] = std::move(coeffs);
    emit(out, doc);
  } else {
    std::string s;
    for (const auto& mu : j.basis) {
      auto it = j.coefficients.find(mu);
      if (it == j.coefficients.end()) continue;
      if (!s.empty()) s += " + ";
      if (!it->second.is_one()) s += "(" + it->second.str() + ")*";
      s += "m" + mu.str();
    }
    out << "J" << j.lambda.str() << " = " << s << "\n";
    out << "eigenvalue shift: " << j.eigenvalue_shift.str() << "\n";
  }
  return kOk;
}

int cmd_csm(const ManyBodyArgs& a, const Common& c, std::ostream& out) {
  if (a.nvars < 1) throw Error(ErrorKind::InvalidArgument, "--nvars must be positive");
  const Coeff beta = beta_of(a);
  const Partition lambda = Partition::parse(a.partition);
  const CsmState st = csm_state(lambda, a.nvars, beta);
  if (c.fmt() == Format::Json) {
    Json doc;
    doc["partition"] = lambda.str();
    doc["nvars"] = a.nvars;
    doc["beta"] = beta.str();
    doc["energy"] = st.energy.str();
    doc["ground_energy"] = st.ground_energy.str();
    doc["polynomial"] = st.polynomial.str("x");
    Json terms = Json::array();
    for (const auto& [e, k] : st.polynomial.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", k.str()}});
    doc["terms"] = std::move(terms);
    emit(out, doc);
  } else {
    out << "P" << lambda.str() << " = " << st.polynomial.str("x") << "\n";
    out << "E = " << st.energy.str() << " (E0 = " << st.ground_energy.str() << ")\n";
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  sub->add_option("--max-order", c.max_order, "Truncation order K (default: EULERODE_MAX_ORDER or 64)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common common;
  try {
    common.max_order = env_max_order();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  CLI::App app{"Exact series solutions of linear ODEs through the Euler-operator decomposition", "eulerode"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve L y = 0 for an operator string");
  solve->add_option("operator", solve_args.op, "Operator, e.g. \"D - 2 - 1/2*d^2\"")->required();
  solve->add_option("--premultiply", solve_args.premultiply, "Multiply the equation by x^k")->check(CLI::NonNegativeNumber);
  solve->add_option("--differentiate", solve_args.differentiate, "Differentiate the equation t times")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--lambda", solve_args.lambda, "Solve only at this indicial root");
  solve->add_option("--bind", solve_args.bind, "Bind a parameter, name=value");
  solve->add_option("--free", solve_args.free, "Name of the one symbolic parameter");
  add_common(solve, common);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Re-check a JSON solution against an operator");
  verify->add_option("solution", verify_args.file, "Solution file (- for stdin)")->required();
  verify->add_option("operator", verify_args.op, "Operator string")->required();
  verify->add_option("--bind", verify_args.bind, "Bind a parameter, name=value");
  verify->add_option("--free", verify_args.free, "Name of the one symbolic parameter");
  add_common(verify, common);

  ClassicalArgs classical_args;
  auto* classical = app.add_subcommand("classical", "Closed form of a classical family");
  classical->add_option("family", classical_args.family, "hermite, laguerre, legendre, gegenbauer, chebyshev-t, "
                                                         "chebyshev-u, bessel, kummer, gauss")
      ->required();
  classical->add_option("n", classical_args.n, "Degree (polynomial families)")->check(CLI::NonNegativeNumber);
  classical->add_option("--param", classical_args.params, "Family parameter, name=value");
  classical->add_option("--branch", classical_args.branch, "default, ascending or descending")->capture_default_str();
  add_common(classical, common);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "All nine families side by side");
  table->add_option("--n", table_args.n, "Degree for the polynomial families")->check(CLI::NonNegativeNumber);
  table->add_option("--param", table_args.params, "Override a default binding, name=value");
  add_common(table, common);

  QesArgs qes_args;
  auto* qes = app.add_subcommand("qes", "Quasi-exactly solvable models");
  qes->require_subcommand(1);
  auto* sextic = qes->add_subcommand("sextic", "-y'' - (2n+3) g x^2 y + g^2 x^6 y = E y");
  sextic->add_option("--n", qes_args.n, "Polynomial degree n")->required();
  sextic->add_option("--g", qes_args.g, "Coupling g (rational)")->required();
  add_common(sextic, common);

  AnharmonicArgs anh_args;
  auto* anh = app.add_subcommand("anharmonic", "Ground-state approximation for alpha x^2 + beta x^4");
  anh->add_option("--alpha", anh_args.alpha, "alpha (rational)")->required();
  anh->add_option("--beta", anh_args.beta, "beta (rational, nonnegative)")->required();
  anh->add_option("--order", anh_args.order, "Series order")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(anh, common);

  ManyBodyArgs jack_args;
  auto* jack_cmd = app.add_subcommand("jack", "Jack polynomial of the Sutherland model");
  jack_cmd->add_option("--partition", jack_args.partition, "Partition, e.g. 2,1")->required();
  jack_cmd->add_option("--nvars", jack_args.nvars, "Number of particles")->required();
  jack_cmd->add_option("--beta", jack_args.beta, "Coupling (rational)");
  jack_cmd->add_flag("--symbolic-beta", jack_args.symbolic, "Keep the coupling symbolic (named b)");
  add_common(jack_cmd, common);

  ManyBodyArgs csm_args;
  auto* csm_cmd = app.add_subcommand("csm", "Calogero-Sutherland eigenstate on the line");
  csm_cmd->add_option("--partition", csm_args.partition, "Partition, e.g. 2,1")->required();
  csm_cmd->add_option("--nvars", csm_args.nvars, "Number of particles")->required();
  csm_cmd->add_option("--beta", csm_args.beta, "Coupling (rational)");
  csm_cmd->add_flag("--symbolic-beta", csm_args.symbolic, "Keep the coupling symbolic (named b)");
  add_common(csm_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*solve) return cmd_solve(solve_args, common, out);
    if (*verify) return cmd_verify(verify_args, common, out, err);
    if (*classical) return cmd_classical(classical_args, common, out);
    if (*table) {
      if (table->count("--format") == 0) common.format = "latex";
      return cmd_table(table_args, common, out);
    }
    if (*sextic) return cmd_qes(qes_args, common, out);
    if (*anh) return cmd_anharmonic(anh_args, common, out);
    if (*jack_cmd) return cmd_jack(jack_args, common, out);
    if (*csm_cmd) return cmd_csm(csm_args, common, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}

}  // namespace eulerode::cli
