#include "eulerode/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

ParamPoly::ParamPoly(std::string name, std::vector<Rational> coeffs)
    : name_(std::move(name)), c_(std::move(coeffs)) {
  trim();
}

ParamPoly ParamPoly::constant(const Rational& c) { return ParamPoly({}, {c}); }

ParamPoly ParamPoly::variable(const std::string& name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty parameter name");
  return ParamPoly(name, {Rational(0), Rational(1)});
}

void ParamPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.size() <= 1) name_.clear();
}

Rational ParamPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(power)];
}

Rational ParamPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational ParamPoly::eval(const Rational& value) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

double ParamPoly::eval(double value) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + it->to_double();
  return acc;
}

ParamPoly ParamPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<long>(i)));
  return ParamPoly(name_, std::move(out));
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

ParamPoly ParamPoly::scaled(const Rational& s) const {
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= s;
  return ParamPoly(name_, std::move(out));
}

ParamPoly ParamPoly::with_name(const std::string& name) const {
  return ParamPoly(is_constant() ? std::string{} : name, c_);
}

std::string ParamPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (negative) os << '-';
    else if (!first) os << '+';
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << name_;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

ParamPoly ParamPoly::operator-() const { return scaled(Rational(-1)); }

std::string common_parameter(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant()) return b.name();
  if (b.is_constant()) return a.name();
  if (a.name() != b.name())
    throw Error(ErrorKind::ParameterMismatch,
                "mixed parameters '" + a.name() + "' and '" + b.name() + "'");
  return a.name();
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  const std::string name = common_parameter(a, b);
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return ParamPoly(name, std::move(out));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  const std::string name = common_parameter(a, b);
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return ParamPoly(name, std::move(out));
}

std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::string name = common_parameter(a, b);
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {ParamPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational lead_inv = b.leading().inverse();
  for (int i = da; i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {ParamPoly(name, std::move(quot)), ParamPoly(name, std::move(rem))};
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly x = a;
  ParamPoly y = b;
  while (!y.is_zero()) {
    ParamPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------------------

ParamRatFunc::ParamRatFunc(const ParamPoly& num, const ParamPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  common_parameter(num, den);
  if (num.is_zero()) {
    den_ = ParamPoly::constant(1);
    return;
  }
  const ParamPoly g = gcd(num, den);
  ParamPoly n = num;
  ParamPoly d = den;
  if (g.degree() > 0) {
    n = divmod(num, g).first;
    d = divmod(den, g).first;
  }
  const Rational lc = d.leading();
  num_ = n.scaled(lc.inverse());
  den_ = d.monic();
}

std::string ParamRatFunc::name() const { return num_.is_constant() ? den_.name() : num_.name(); }

Rational ParamRatFunc::eval(const Rational& value) const {
  const Rational d = den_.eval(value);
  if (d.is_zero())
    throw Error(ErrorKind::PoleAtValue,
                "denominator " + den_.str() + " vanishes at " + name() + " = " + value.str());
  return num_.eval(value) / d;
}

std::string ParamRatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

ParamRatFunc ParamRatFunc::operator-() const {
  ParamRatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ParamRatFunc operator+(const ParamRatFunc& a, const ParamRatFunc& b) {
  if (a.den_ == b.den_) return ParamRatFunc(a.num_ + b.num_, a.den_);
  return ParamRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRatFunc operator-(const ParamRatFunc& a, const ParamRatFunc& b) { return a + (-b); }

ParamRatFunc operator*(const ParamRatFunc& a, const ParamRatFunc& b) {
  return ParamRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRatFunc operator/(const ParamRatFunc& a, const ParamRatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return ParamRatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

// ---------------------------------------------------------------------------

namespace {

int sign_changes(const std::vector<ParamPoly>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.eval(at).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a monic squarefree integer polynomial.
void isolate_integer_roots(const std::vector<ParamPoly>& chain, const Rational& lo,
                           const Rational& hi, int v_lo, int v_hi, std::vector<mpz_class>& out) {
  if (v_lo - v_hi == 0) return;
  const Rational width = hi - lo;
  if (width == Rational(1)) {
    const Rational candidate = lo + Rational(1, 2);
    if (chain.front().eval(candidate).is_zero()) out.push_back(candidate.numerator());
    return;
  }
  const Rational mid = lo + Rational(width.to_long() / 2);
  const int v_mid = sign_changes(chain, mid);
  isolate_integer_roots(chain, lo, mid, v_lo, v_mid, out);
  isolate_integer_roots(chain, mid, hi, v_mid, v_hi, out);
}

}  // namespace

std::vector<RationalRoot> rational_roots(const ParamPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroEulerPart, "rational roots of the zero polynomial");
  if (p.degree() == 0) return {};

  // Squarefree part, then clear denominators.
  const ParamPoly g = gcd(p, p.derivative());
  const ParamPoly sqf = g.degree() > 0 ? divmod(p, g).first : p;
  mpz_class lcm_den = 1;
  for (const auto& c : sqf.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : sqf.coeffs()) ints.push_back(c.numerator() * (lcm_den / c.denominator()));
  const int d = sqf.degree();
  const mpz_class lead = ints.back();

  // y = lead * x turns sqf into a monic integer polynomial whose rational
  // roots are all integers.
  std::vector<Rational> monic_coeffs(ints.size());
  for (int i = 0; i <= d; ++i) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(d - i));
    monic_coeffs[static_cast<std::size_t>(i)] = Rational(mpz_class(ints[static_cast<std::size_t>(i)] * scale / lead));
  }
  const ParamPoly monic("y", std::move(monic_coeffs));

  std::vector<ParamPoly> chain{monic, monic.derivative()};
  while (chain.back().degree() > 0) {
    ParamPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  mpz_class bound = 0;
  for (const auto& c : monic.coeffs()) {
    mpz_class a = ::abs(c.numerator());
    if (a > bound) bound = a;
  }
  bound += 1;
  const Rational lo = Rational(mpz_class(-bound)) - Rational(1, 2);
  const Rational hi = Rational(bound) + Rational(1, 2);
  std::vector<mpz_class> ys;
  isolate_integer_roots(chain, lo, hi, sign_changes(chain, lo), sign_changes(chain, hi), ys);

  std::vector<RationalRoot> roots;
  for (const auto& y : ys) {
    RationalRoot root{Rational(y, lead), 0};
    const ParamPoly factor(p.name().empty() ? "x" : p.name(), {-root.value, Rational(1)});
    ParamPoly rest = p.with_name(p.name().empty() ? "x" : p.name());
    while (true) {
      auto [q, r] = divmod(rest, factor);
      if (!r.is_zero()) break;
      ++root.multiplicity;
      rest = q;
    }
    roots.push_back(std::move(root));
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

int count_real_roots(const ParamPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroEulerPart, "real roots of the zero polynomial");
  std::vector<ParamPoly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    ParamPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  // Signs at -inf and +inf come from leading terms alone.
  auto changes = [&](bool negative_end) {
    int count = 0;
    int last = 0;
    for (const auto& q : chain) {
      if (q.is_zero()) continue;
      int sg = q.leading().sign();
      if (negative_end && q.degree() % 2) sg = -sg;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  return changes(true) - changes(false);
}

}  // namespace eulerode
