#include "eulerode/operator.hpp"

#include <algorithm>
#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

LinDiffOp::LinDiffOp(const std::vector<MonoOp>& terms) {
  for (const auto& t : terms) add_term(t.xpow, t.dorder, t.coeff);
}

LinDiffOp LinDiffOp::scalar(const Coeff& c) { return mono(c, 0, 0); }

LinDiffOp LinDiffOp::mono(const Coeff& c, int xpow, int dorder) {
  if (xpow < 0 || dorder < 0)
    throw Error(ErrorKind::InvalidArgument, "negative power in operator monomial");
  LinDiffOp op;
  op.add_term(xpow, dorder, c);
  return op;
}

void LinDiffOp::add_term(int xpow, int dorder, const Coeff& c) {
  if (xpow < 0 || dorder < 0)
    throw Error(ErrorKind::InvalidArgument, "negative power in operator monomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{xpow, dorder}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<MonoOp> LinDiffOp::monomials() const {
  std::vector<MonoOp> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

Coeff LinDiffOp::coeff(int xpow, int dorder) const {
  auto it = terms_.find({xpow, dorder});
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::optional<int> LinDiffOp::min_degree() const {
  std::optional<int> out;
  for (const auto& [key, c] : terms_) {
    const int d = key.first - key.second;
    if (!out || d < *out) out = d;
  }
  return out;
}

std::optional<int> LinDiffOp::max_degree() const {
  std::optional<int> out;
  for (const auto& [key, c] : terms_) {
    const int d = key.first - key.second;
    if (!out || d > *out) out = d;
  }
  return out;
}

std::optional<int> LinDiffOp::definite_degree() const {
  auto lo = min_degree();
  if (lo && lo == max_degree()) return lo;
  return std::nullopt;
}

std::optional<std::string> LinDiffOp::parameter_name() const {
  std::optional<std::string> name;
  for (const auto& [key, c] : terms_) {
    auto n = c.parameter_name();
    if (!n) continue;
    if (name && *name != *n)
      throw Error(ErrorKind::ParameterMismatch, "operator mixes parameters '" + *name + "' and '" + *n + "'");
    name = n;
  }
  return name;
}

std::string LinDiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto [a, b] = key;
    bool negative = c.is_rational() && c.as_rational().sign() < 0;
    std::string cs = negative ? (-c).str() : c.str();
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (cs != "1" || (a == 0 && b == 0)) factors.push_back(cs);
    if (a > 0) factors.push_back(a == 1 ? "x" : "x^" + std::to_string(a));
    if (b > 0) factors.push_back(b == 1 ? "d" : "d^" + std::to_string(b));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

LinDiffOp LinDiffOp::operator-() const { return Coeff(-1) * *this; }

LinDiffOp operator+(const LinDiffOp& a, const LinDiffOp& b) {
  LinDiffOp out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.first, key.second, c);
  return out;
}

LinDiffOp operator-(const LinDiffOp& a, const LinDiffOp& b) { return a + (-b); }

LinDiffOp operator*(const LinDiffOp& a, const LinDiffOp& b) {
  // x^a1 d^b1 x^a2 d^b2 = sum_j C(b1, j) a2!/(a2-j)! x^(a1+a2-j) d^(b1+b2-j)
  LinDiffOp out;
  for (const auto& [ka, ca] : a.terms_) {
    const auto [a1, b1] = ka;
    for (const auto& [kb, cb] : b.terms_) {
      const auto [a2, b2] = kb;
      const Coeff c = ca * cb;
      for (int j = 0; j <= std::min(b1, a2); ++j) {
        const Rational w = binomial(b1, j) * falling_factorial(Rational(a2), j);
        out.add_term(a1 + a2 - j, b1 + b2 - j, c * Coeff(w));
      }
    }
  }
  return out;
}

LinDiffOp operator*(const Coeff& s, const LinDiffOp& a) {
  LinDiffOp out;
  for (const auto& [key, c] : a.terms_) out.add_term(key.first, key.second, s * c);
  return out;
}

// ---------------------------------------------------------------------------

EulerPoly EulerPoly::from_roots(const std::vector<Rational>& roots) {
  ParamPoly p = ParamPoly::constant(1);
  for (const auto& r : roots) p = p * ParamPoly("D", {-r, Rational(1)});
  return EulerPoly(p);
}

LinDiffOp EulerPoly::to_operator() const {
  LinDiffOp out;
  LinDiffOp power = LinDiffOp::identity();
  const auto& c = p_.coeffs();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n > 0) power = LinDiffOp::euler() * power;
    out = out + Coeff(c[n]) * power;
  }
  return out;
}

std::string EulerPoly::str() const {
  const auto& c = p_.coeffs();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
    const Rational& a = c[static_cast<std::size_t>(n)];
    if (a.is_zero()) continue;
    const bool negative = a.sign() < 0;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = a.abs();
    if (n == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << 'D';
    if (n > 1) os << '^' << n;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

GeneralizedSeries apply(const LinDiffOp& op, const GeneralizedSeries& s) {
  GeneralizedSeries::Terms out;
  for (const auto& [offset, c] : s.terms()) {
    const Rational mu = s.base() + Rational(offset);
    for (const auto& [key, oc] : op.terms()) {
      const auto [a, b] = key;
      const Rational ff = falling_factorial(mu, b);
      if (ff.is_zero()) continue;
      const Coeff term = oc * c * Coeff(ff);
      auto [it, inserted] = out.emplace(offset + a - b, term);
      if (!inserted) it->second += term;
    }
  }
  std::optional<std::int64_t> order = s.truncation_order();
  if (order && !op.is_zero()) {
    if (s.direction() == Direction::Ascending) *order += *op.min_degree();
    else *order -= *op.max_degree();
  }
  return GeneralizedSeries(s.base(), std::move(out), order, s.direction());
}

DegreeSplit degree_split(const LinDiffOp& op) {
  ParamPoly F;
  LinDiffOp P;
  for (const auto& m : op.monomials()) {
    if (m.degree() != 0) {
      P = P + LinDiffOp::mono(m.coeff, m.xpow, m.dorder);
      continue;
    }
    if (!m.coeff.is_rational())
      throw Error(ErrorKind::ParametricEulerPart,
                  "degree-zero term carries parameter coefficient " + m.coeff.str() +
                      "; bind it to a rational first");
    ParamPoly ff = ParamPoly::constant(m.coeff.as_rational());
    for (int i = 0; i < m.dorder; ++i) ff = ff * ParamPoly("D", {Rational(-i), Rational(1)});
    F = F + ff;
  }
  return {EulerPoly(F), P};
}

IndicialRoots indicial_roots(const EulerPoly& F) {
  if (F.is_zero()) throw Error(ErrorKind::ZeroEulerPart, "operator has no degree-zero part");
  IndicialRoots out;
  out.degree = F.degree();
  int represented = 0;
  for (const auto& r : rational_roots(F.poly())) {
    out.roots.push_back(r.value);
    out.multiplicities.push_back(r.multiplicity);
    represented += r.multiplicity;
  }
  out.unrepresentable = out.degree - represented;
  return out;
}

LinDiffOp premultiply(const LinDiffOp& op, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "premultiply needs a nonnegative power");
  return LinDiffOp::x(k) * op;
}

LinDiffOp differentiate_eq(const LinDiffOp& op, int times) {
  if (times < 0) throw Error(ErrorKind::InvalidArgument, "differentiate needs a nonnegative count");
  return LinDiffOp::d(times) * op;
}

LinDiffOp commutator(const LinDiffOp& a, const LinDiffOp& b) { return a * b - b * a; }

}  // namespace eulerode
