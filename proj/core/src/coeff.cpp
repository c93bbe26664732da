#include "eulerode/coeff.hpp"

#include <ostream>

#include "eulerode/errors.hpp"

namespace eulerode {

namespace {

Coeff demote(ParamPoly p) {
  if (p.is_constant()) return Coeff(p.constant_term());
  return Coeff(std::move(p));
}

}  // namespace

Coeff::Coeff(ParamPoly p) {
  if (p.is_constant()) v_ = p.constant_term();
  else v_ = std::move(p);
}

Coeff::Coeff(ParamRatFunc f) {
  if (f.is_polynomial()) {
    // Denominator is monic and constant, hence 1.
    *this = Coeff(f.num());
  } else {
    v_ = std::move(f);
  }
}

bool Coeff::is_zero() const { return is_rational() && std::get<Rational>(v_).is_zero(); }

bool Coeff::is_one() const { return is_rational() && std::get<Rational>(v_).is_one(); }

const Rational& Coeff::as_rational() const {
  if (!is_rational())
    throw Error(ErrorKind::InvalidArgument, "coefficient " + str() + " is not a plain rational");
  return std::get<Rational>(v_);
}

ParamPoly Coeff::as_poly() const {
  switch (kind()) {
    case Kind::Rational: return ParamPoly::constant(std::get<Rational>(v_));
    case Kind::Poly: return std::get<ParamPoly>(v_);
    case Kind::RatFunc: break;
  }
  throw Error(ErrorKind::InvalidArgument, "coefficient " + str() + " is not a polynomial");
}

ParamRatFunc Coeff::as_ratfunc() const {
  if (kind() == Kind::RatFunc) return std::get<ParamRatFunc>(v_);
  return ParamRatFunc(as_poly(), ParamPoly::constant(1));
}

std::optional<std::string> Coeff::parameter_name() const {
  switch (kind()) {
    case Kind::Rational: return std::nullopt;
    case Kind::Poly: return std::get<ParamPoly>(v_).name();
    case Kind::RatFunc: return std::get<ParamRatFunc>(v_).name();
  }
  return std::nullopt;
}

Rational Coeff::eval(const Rational& value) const {
  switch (kind()) {
    case Kind::Rational: return std::get<Rational>(v_);
    case Kind::Poly: return std::get<ParamPoly>(v_).eval(value);
    case Kind::RatFunc: return std::get<ParamRatFunc>(v_).eval(value);
  }
  return Rational(0);
}

std::string Coeff::str() const {
  switch (kind()) {
    case Kind::Rational: return std::get<Rational>(v_).str();
    case Kind::Poly: return std::get<ParamPoly>(v_).str();
    case Kind::RatFunc: return std::get<ParamRatFunc>(v_).str();
  }
  return {};
}

Coeff Coeff::operator-() const {
  switch (kind()) {
    case Kind::Rational: return Coeff(-std::get<Rational>(v_));
    case Kind::Poly: return Coeff(-std::get<ParamPoly>(v_));
    case Kind::RatFunc: return Coeff(-std::get<ParamRatFunc>(v_));
  }
  return *this;
}

std::optional<std::string> common_parameter(const Coeff& a, const Coeff& b) {
  auto na = a.parameter_name();
  auto nb = b.parameter_name();
  if (na && nb && *na != *nb)
    throw Error(ErrorKind::ParameterMismatch, "mixed parameters '" + *na + "' and '" + *nb + "'");
  return na ? na : nb;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.is_rational() && b.is_rational()) return Coeff(std::get<Rational>(a.v_) + std::get<Rational>(b.v_));
  common_parameter(a, b);
  if (a.kind() != Coeff::Kind::RatFunc && b.kind() != Coeff::Kind::RatFunc)
    return demote(a.as_poly() + b.as_poly());
  return Coeff(a.as_ratfunc() + b.as_ratfunc());
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_rational() && b.is_rational()) return Coeff(std::get<Rational>(a.v_) * std::get<Rational>(b.v_));
  common_parameter(a, b);
  if (a.is_zero() || b.is_zero()) return Coeff(0);
  if (a.kind() != Coeff::Kind::RatFunc && b.kind() != Coeff::Kind::RatFunc)
    return demote(a.as_poly() * b.as_poly());
  return Coeff(a.as_ratfunc() * b.as_ratfunc());
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero coefficient");
  if (a.is_rational() && b.is_rational()) return Coeff(std::get<Rational>(a.v_) / std::get<Rational>(b.v_));
  common_parameter(a, b);
  if (b.is_rational()) {
    const Rational inv = std::get<Rational>(b.v_).inverse();
    if (a.kind() == Coeff::Kind::Poly) return Coeff(std::get<ParamPoly>(a.v_).scaled(inv));
    return Coeff(a.as_ratfunc() * ParamRatFunc(ParamPoly::constant(inv), ParamPoly::constant(1)));
  }
  if (a.kind() != Coeff::Kind::RatFunc && b.kind() == Coeff::Kind::Poly) {
    auto [q, r] = divmod(a.as_poly(), b.as_poly());
    if (r.is_zero()) return demote(std::move(q));
  }
  return Coeff(a.as_ratfunc() / b.as_ratfunc());
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.str(); }

Coeff field_arith(const Coeff& a, const Coeff& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

Rational eval_param(const Coeff& c, const Rational& value) { return c.eval(value); }

}  // namespace eulerode
