#include "eulerode_cli/emit.hpp"

#include <cstdio>

#include "eulerode/errors.hpp"
#include "eulerode_cli/coeff_parse.hpp"

namespace eulerode::cli {

Json solution_json(const GeneralizedSeries& s, Json meta) {
  Json doc;
  doc["base_exponent"] = s.base().str();
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(Json{{"offset", k}, {"coeff", c.str()}});
  doc["terms"] = std::move(terms);
  doc["status"] = s.is_exact() ? "terminated" : "truncated";
  if (!s.is_exact()) {
    meta["truncation_order"] = *s.truncation_order();
    meta["direction"] = s.direction() == Direction::Ascending ? "ascending" : "descending";
  }
  doc["meta"] = std::move(meta);
  return doc;
}

GeneralizedSeries series_from_json(const Json& doc) {
  try {
    const Rational base = Rational::parse(doc.at("base_exponent").get<std::string>());
    GeneralizedSeries::Terms terms;
    for (const auto& t : doc.at("terms"))
      terms[t.at("offset").get<std::int64_t>()] = parse_coeff(t.at("coeff").get<std::string>());
    const std::string status = doc.at("status").get<std::string>();
    if (status == "terminated") return GeneralizedSeries(base, std::move(terms));
    if (status != "truncated") throw Error(ErrorKind::InvalidArgument, "unknown status '" + status + "'");
    const Json& meta = doc.at("meta");
    const auto order = meta.at("truncation_order").get<std::int64_t>();
    const std::string dir = meta.value("direction", std::string("ascending"));
    return GeneralizedSeries(base, std::move(terms), order,
                             dir == "descending" ? Direction::Descending : Direction::Ascending);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed solution document: ") + e.what());
  }
}

std::string approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  const std::string sign = r.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + r.numerator().get_str().substr(sign.size()) + "}{" + r.denominator().get_str() + "}";
}

std::string latex_poly(const ParamPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coeff(i);
    if (c.is_zero()) continue;
    if (c.sign() < 0) s += s.empty() ? "-" : " - ";
    else if (!s.empty()) s += " + ";
    const Rational mag = c.abs();
    if (i == 0 || !mag.is_one()) s += latex_rational(mag);
    if (i > 0) s += var;
    if (i > 1) s += "^{" + std::to_string(i) + "}";
  }
  return s;
}

bool is_sum(const Coeff& c) {
  if (c.kind() != Coeff::Kind::Poly) return false;
  int nonzero = 0;
  for (const auto& r : c.as_poly().coeffs()) nonzero += r.is_zero() ? 0 : 1;
  return nonzero > 1;
}

std::string power_of(const std::string& var, const Rational& e) {
  if (e.is_zero()) return "";
  if (e.is_one()) return var;
  return var + "^{" + (e.is_integer() ? e.str() : latex_rational(e)) + "}";
}

// Appends "c*rest" with sign handling; coefficient 1 is dropped when rest is
// nonempty.
void append_term(std::string& s, const Coeff& c, const std::string& rest) {
  bool negative = c.is_rational() && c.as_rational().sign() < 0;
  Coeff mag = negative ? -c : c;
  if (negative) s += s.empty() ? "-" : " - ";
  else if (!s.empty()) s += " + ";
  if (mag.is_one() && !rest.empty()) {
    s += rest;
    return;
  }
  std::string cs = latex_coeff(mag);
  if (is_sum(mag) && !rest.empty()) cs = "\\left(" + cs + "\\right)";
  s += cs;
  if (!rest.empty()) s += " " + rest;
}

}  // namespace

std::string latex_coeff(const Coeff& c) {
  switch (c.kind()) {
    case Coeff::Kind::Rational:
      return latex_rational(c.as_rational());
    case Coeff::Kind::Poly: {
      const ParamPoly p = c.as_poly();
      return latex_poly(p, p.name());
    }
    case Coeff::Kind::RatFunc: {
      const ParamRatFunc f = c.as_ratfunc();
      return "\\frac{" + latex_poly(f.num(), f.name()) + "}{" + latex_poly(f.den(), f.name()) + "}";
    }
  }
  return {};
}

std::string latex_series(const GeneralizedSeries& s) {
  std::string out;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
    append_term(out, it->second, power_of("x", s.base() + Rational(static_cast<long>(it->first))));
  if (out.empty()) out = "0";
  if (!s.is_exact()) {
    const auto k = *s.truncation_order();
    const Rational edge = s.base() + Rational(static_cast<long>(s.direction() == Direction::Ascending ? k : -k));
    out += " + O\\left(" + (edge.is_zero() ? std::string("1") : power_of("x", edge)) + "\\right)";
  }
  return out;
}

std::string latex_operator(const LinDiffOp& op) {
  std::string out;
  for (const auto& m : op.monomials()) {
    std::string rest = power_of("x", Rational(m.xpow));
    if (m.dorder > 0) {
      if (!rest.empty()) rest += " ";
      rest += m.dorder == 1 ? "\\partial" : "\\partial^{" + std::to_string(m.dorder) + "}";
    }
    append_term(out, m.coeff, rest);
  }
  return out.empty() ? "0" : out;
}

std::string latex_euler(const EulerPoly& F) { return latex_poly(F.poly(), "D"); }

std::string latex_exp_form(const ExpForm& form) {
  std::string body;
  const Coeff& s = form.scale;
  if (s == Coeff(-1)) body = "-";
  else if (!s.is_one()) body = latex_coeff(s) + "\\,";
  for (auto it = form.stages.rbegin(); it != form.stages.rend(); ++it) {
    if (const auto* r = std::get_if<Resolvent>(&*it)) {
      std::string den = "D";
      if (r->shift.sign() > 0) den += " + " + latex_rational(r->shift);
      if (r->shift.sign() < 0) den += " - " + latex_rational(r->shift.abs());
      body += "\\frac{1}{" + den + "}";
    } else {
      const auto& op = std::get<LinDiffOp>(*it);
      const std::string t = latex_operator(op);
      body += op.terms().size() > 1 ? "\\left(" + t + "\\right)" : t;
    }
  }
  std::string anchor = latex_series(form.anchor);
  if (form.anchor.terms().size() > 1) anchor = "\\left(" + anchor + "\\right)";
  if (anchor == "1") anchor.clear();
  return "\\exp\\left[" + body + "\\right]" + (anchor.empty() ? "" : " " + anchor);
}

}  // namespace eulerode::cli
