#include "eulerode/classical.hpp"

#include <algorithm>
#include <set>

#include "eulerode/errors.hpp"

namespace eulerode {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients in x

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_scale(const Poly& a, const Rational& s) {
  Poly out(a);
  for (auto& c : out) c *= s;
  return out;
}

Poly poly_shift(const Poly& a) {
  Poly out(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

GeneralizedSeries from_poly(const Poly& p) {
  GeneralizedSeries::Terms t;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) t.emplace(static_cast<std::int64_t>(i), Coeff(p[i]));
  return GeneralizedSeries(Rational(0), std::move(t));
}

// Runs a three-term recurrence p_{k+1} = step(k, p_k, p_{k-1}).
template <typename Step>
Poly three_term(int n, Poly p0, Poly p1, Step step) {
  if (n == 0) return p0;
  for (int k = 1; k < n; ++k) {
    Poly next = step(k, p1, p0);
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

// Series with coefficient 1 at offset 0 and c_{next}/c_j = ratio(j) where
// next = j + 1 (ascending) or the offset moves down by one (descending).
GeneralizedSeries term_ratio_series(const Rational& base, Direction direction, int step_size,
                                    int order_cap, const std::function<Rational(int)>& ratio) {
  GeneralizedSeries::Terms t{{0, Coeff(1)}};
  Rational c(1);
  bool terminated = false;
  for (int j = 0;; ++j) {
    const std::int64_t offset = static_cast<std::int64_t>(j + 1) * step_size;
    const bool inside = direction == Direction::Ascending ? offset < order_cap : offset > -order_cap;
    if (!inside) break;
    c *= ratio(j);
    if (c.is_zero()) {
      terminated = true;
      break;
    }
    t.emplace(offset, Coeff(c));
  }
  std::optional<std::int64_t> order;
  if (!terminated) order = order_cap;
  return GeneralizedSeries(base, std::move(t), order, direction);
}

Rational rising(const Rational& a, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= a + Rational(i);
  return out;
}

LinDiffOp mono(const Rational& c, int a, int b) { return LinDiffOp::mono(Coeff(c), a, b); }

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Legendre: return "legendre";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::ChebyshevT: return "chebyshev-t";
    case Family::ChebyshevU: return "chebyshev-u";
    case Family::Bessel: return "bessel";
    case Family::Kummer: return "kummer";
    case Family::Gauss: return "gauss";
  }
  return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
  for (Family f : all_families())
    if (name == to_string(f)) return f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families{
      Family::Hermite,    Family::Laguerre,   Family::Legendre, Family::Gegenbauer, Family::ChebyshevT,
      Family::ChebyshevU, Family::Bessel,     Family::Kummer,   Family::Gauss};
  return families;
}

std::vector<std::string> required_parameters(Family f) {
  switch (f) {
    case Family::Laguerre: return {"alpha"};
    case Family::Gegenbauer: return {"lambda"};
    case Family::Bessel: return {"nu"};
    case Family::Kummer: return {"alpha", "gamma"};
    case Family::Gauss: return {"alpha", "beta", "gamma"};
    default: return {};
  }
}

bool FamilySpec::is_polynomial_family() const {
  return family != Family::Bessel && family != Family::Kummer && family != Family::Gauss;
}

void FamilySpec::validate() const {
  for (const auto& name : required_parameters(family))
    if (!params.count(name))
      throw Error(ErrorKind::MissingParameter,
                  std::string(to_string(family)) + " needs parameter '" + name + "'");
  if (is_polynomial_family() && n < 0)
    throw Error(ErrorKind::InvalidArgument, "polynomial degree must be nonnegative");
  if (is_polynomial_family() && branch != Branch::Default)
    throw Error(ErrorKind::InvalidArgument, "polynomial families have a single branch");
  if (family == Family::Bessel && branch == Branch::Descending)
    throw Error(ErrorKind::InvalidArgument, "bessel has no descending branch");
}

const Rational& FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw Error(ErrorKind::MissingParameter, std::string(to_string(family)) + " needs parameter '" + name + "'");
  return it->second;
}

LinDiffOp build_equation(const FamilySpec& spec) {
  spec.validate();
  const Rational n(spec.n);
  switch (spec.family) {
    case Family::Hermite:
      return mono(1, 1, 1) + mono(-n, 0, 0) + mono(Rational(-1, 2), 0, 2);
    case Family::Laguerre: {
      const Rational& a = spec.param("alpha");
      return mono(1, 1, 1) + mono(-n, 0, 0) + mono(-(a + 1), 0, 1) + mono(-1, 1, 2);
    }
    case Family::Legendre:
      return mono(1, 2, 2) + mono(2, 1, 1) + mono(-n * (n + 1), 0, 0) + mono(-1, 0, 2);
    case Family::Gegenbauer: {
      const Rational& l = spec.param("lambda");
      return mono(1, 2, 2) + mono(Rational(2) * l + 1, 1, 1) + mono(-n * (n + Rational(2) * l), 0, 0) +
             mono(-1, 0, 2);
    }
    case Family::ChebyshevT:
      return mono(1, 2, 2) + mono(1, 1, 1) + mono(-n * n, 0, 0) + mono(-1, 0, 2);
    case Family::ChebyshevU:
      return mono(1, 2, 2) + mono(3, 1, 1) + mono(-n * (n + 2), 0, 0) + mono(-1, 0, 2);
    case Family::Bessel: {
      const Rational& nu = spec.param("nu");
      return mono(1, 2, 2) + mono(1, 1, 1) + mono(-nu * nu, 0, 0) + mono(1, 2, 0);
    }
    case Family::Kummer: {
      const Rational& a = spec.param("alpha");
      const Rational& g = spec.param("gamma");
      return mono(1, 1, 1) + mono(a, 0, 0) + mono(-1, 1, 2) + mono(-g, 0, 1);
    }
    case Family::Gauss: {
      const Rational& a = spec.param("alpha");
      const Rational& b = spec.param("beta");
      const Rational& g = spec.param("gamma");
      return mono(1, 1, 2) + mono(-1, 2, 2) + mono(g, 0, 1) + mono(-(a + b + 1), 1, 1) + mono(-a * b, 0, 0);
    }
  }
  return {};
}

namespace {

bool ascending_branch(const FamilySpec& spec) {
  return (spec.family == Family::Kummer || spec.family == Family::Gauss) && spec.branch == Branch::Ascending;
}

}  // namespace

LinDiffOp solving_equation(const FamilySpec& spec) {
  LinDiffOp op = build_equation(spec);
  return ascending_branch(spec) ? premultiply(op, 1) : op;
}

Rational anchor_exponent(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Bessel: return spec.param("nu");
    case Family::Kummer: return ascending_branch(spec) ? Rational(0) : -spec.param("alpha");
    case Family::Gauss: return ascending_branch(spec) ? Rational(0) : -spec.param("beta");
    default: return Rational(spec.n);
  }
}

ExpForm exp_form(const FamilySpec& spec) {
  spec.validate();
  const Rational n(spec.n);
  ExpForm form;
  form.anchor = GeneralizedSeries::monomial(anchor_exponent(spec));
  const LinDiffOp d2 = LinDiffOp::d(2);
  switch (spec.family) {
    case Family::Hermite:
      form.stages = {d2};
      form.scale = Coeff(Rational(-1, 4));
      break;
    case Family::Laguerre:
      form.stages = {mono(-1, 1, 2) + mono(-(spec.param("alpha") + 1), 0, 1)};
      break;
    case Family::Legendre:
      form.stages = {d2, Resolvent{n + 1}};
      form.scale = Coeff(Rational(-1, 2));
      break;
    case Family::Gegenbauer:
      form.stages = {d2, Resolvent{n + Rational(2) * spec.param("lambda")}};
      form.scale = Coeff(Rational(-1, 2));
      break;
    case Family::ChebyshevT:
      form.stages = {d2, Resolvent{n}};
      form.scale = Coeff(Rational(-1, 2));
      break;
    case Family::ChebyshevU:
      form.stages = {d2, Resolvent{n + 2}};
      form.scale = Coeff(Rational(-1, 2));
      break;
    case Family::Bessel:
      // Ascending solution from x^nu: the resolvent shift has the same sign
      // as the anchor exponent (see bessel_table_pairing for the other one).
      form.stages = {LinDiffOp::x(2), Resolvent{spec.param("nu")}};
      form.scale = Coeff(Rational(-1, 2));
      break;
    case Family::Kummer: {
      const Rational& a = spec.param("alpha");
      const Rational& g = spec.param("gamma");
      if (ascending_branch(spec)) {
        form.stages = {LinDiffOp::euler() + mono(a, 0, 0), LinDiffOp::x(1), Resolvent{g - 1}};
      } else {
        form.stages = {mono(-1, 1, 2) + mono(-g, 0, 1)};
      }
      break;
    }
    case Family::Gauss: {
      const Rational& a = spec.param("alpha");
      const Rational& b = spec.param("beta");
      const Rational& g = spec.param("gamma");
      if (ascending_branch(spec)) {
        const LinDiffOp da = LinDiffOp::euler() + mono(a, 0, 0);
        const LinDiffOp db = LinDiffOp::euler() + mono(b, 0, 0);
        form.stages = {da * db, LinDiffOp::x(1), Resolvent{g - 1}};
      } else {
        form.stages = {mono(1, 1, 2) + mono(g, 0, 1), Resolvent{a}};
        form.scale = Coeff(-1);
      }
      break;
    }
  }
  return form;
}

GeneralizedSeries closed_form(const FamilySpec& spec, int order_cap) {
  return exp_apply(exp_form(spec), order_cap);
}

GeneralizedSeries oracle(const FamilySpec& spec, int order_cap) {
  spec.validate();
  const int n = spec.n;
  const Poly one{Rational(1)};
  switch (spec.family) {
    case Family::Hermite:
      return from_poly(three_term(n, one, {Rational(0), Rational(2)}, [](int k, const Poly& p, const Poly& q) {
        return poly_add(poly_scale(poly_shift(p), 2), poly_scale(q, Rational(-2 * k)));
      }));
    case Family::Laguerre: {
      const Rational a = spec.param("alpha");
      return from_poly(three_term(n, one, {a + 1, Rational(-1)}, [&](int k, const Poly& p, const Poly& q) {
        Poly next = poly_add(poly_scale(p, Rational(2 * k + 1) + a), poly_scale(poly_shift(p), -1));
        next = poly_add(next, poly_scale(q, -(Rational(k) + a)));
        return poly_scale(next, Rational(1, k + 1));
      }));
    }
    case Family::Legendre:
      return from_poly(three_term(n, one, {Rational(0), Rational(1)}, [](int k, const Poly& p, const Poly& q) {
        return poly_scale(poly_add(poly_scale(poly_shift(p), 2 * k + 1), poly_scale(q, -k)), Rational(1, k + 1));
      }));
    case Family::Gegenbauer: {
      const Rational l = spec.param("lambda");
      // m C_m = 2x(m + l - 1) C_{m-1} - (m + 2l - 2) C_{m-2}, with m = k + 1.
      return from_poly(three_term(n, one, {Rational(0), Rational(2) * l}, [&](int k, const Poly& p, const Poly& q) {
        const int m = k + 1;
        Poly next = poly_add(poly_scale(poly_shift(p), Rational(2) * (Rational(m) + l - 1)),
                             poly_scale(q, -(Rational(m) + Rational(2) * l - 2)));
        return poly_scale(next, Rational(1, m));
      }));
    }
    case Family::ChebyshevT:
    case Family::ChebyshevU: {
      const Poly p1 = spec.family == Family::ChebyshevT ? Poly{Rational(0), Rational(1)} : Poly{Rational(0), Rational(2)};
      return from_poly(three_term(n, one, p1, [](int, const Poly& p, const Poly& q) {
        return poly_add(poly_scale(poly_shift(p), 2), poly_scale(q, -1));
      }));
    }
    case Family::Bessel: {
      const Rational nu = spec.param("nu");
      // sum_j (-1)^j x^(2j) / (4^j j! (nu+1)_j)
      return term_ratio_series(nu, Direction::Ascending, 2, order_cap, [&](int j) {
        return Rational(-1) / (Rational(4 * (j + 1)) * (nu + Rational(j + 1)));
      });
    }
    case Family::Kummer: {
      const Rational a = spec.param("alpha");
      const Rational g = spec.param("gamma");
      if (ascending_branch(spec))
        return term_ratio_series(Rational(0), Direction::Ascending, 1, order_cap, [&](int k) {
          return (a + Rational(k)) / (Rational(k + 1) * (g + Rational(k)));
        });
      // x^-a 2F0(a, a - g + 1; ; -1/x)
      return term_ratio_series(-a, Direction::Descending, -1, order_cap, [&](int j) {
        return -(a + Rational(j)) * (a - g + Rational(1 + j)) / Rational(j + 1);
      });
    }
    case Family::Gauss: {
      const Rational a = spec.param("alpha");
      const Rational b = spec.param("beta");
      const Rational g = spec.param("gamma");
      if (ascending_branch(spec))
        return term_ratio_series(Rational(0), Direction::Ascending, 1, order_cap, [&](int k) {
          return (a + Rational(k)) * (b + Rational(k)) / (Rational(k + 1) * (g + Rational(k)));
        });
      // x^-b 2F1(b, b - g + 1; b - a + 1; 1/x)
      return term_ratio_series(-b, Direction::Descending, -1, order_cap, [&](int j) {
        return (b + Rational(j)) * (b - g + Rational(1 + j)) / (Rational(j + 1) * (b - a + Rational(1 + j)));
      });
    }
  }
  return {};
}

Rational standard_leading_coefficient(const FamilySpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::Hermite: return Rational(2).pow(static_cast<unsigned>(n));
    case Family::Laguerre: return Rational(n % 2 ? -1 : 1) / factorial(n);
    case Family::Legendre: return factorial(2 * n) / (Rational(2).pow(static_cast<unsigned>(n)) * factorial(n) * factorial(n));
    case Family::Gegenbauer:
      return Rational(2).pow(static_cast<unsigned>(n)) * rising(spec.param("lambda"), n) / factorial(n);
    case Family::ChebyshevT: return n == 0 ? Rational(1) : Rational(2).pow(static_cast<unsigned>(n - 1));
    case Family::ChebyshevU: return Rational(2).pow(static_cast<unsigned>(n));
    default: return Rational(1);
  }
}

Coeff match_constant(const GeneralizedSeries& computed, const GeneralizedSeries& reference) {
  if (computed.is_zero() || reference.is_zero())
    throw Error(ErrorKind::InvalidArgument, "match_constant needs two nonzero series");
  const Rational base = std::min(computed.base(), reference.base());
  const GeneralizedSeries a = computed.rebased(base);
  const GeneralizedSeries b = reference.rebased(base);

  std::set<std::int64_t> offsets;
  for (const auto& [k, c] : a.terms()) offsets.insert(k);
  for (const auto& [k, c] : b.terms()) offsets.insert(k);

  std::optional<Coeff> scale;
  for (std::int64_t k : offsets) {
    if (!a.in_window(k) || !b.in_window(k)) continue;
    const Coeff ca = a.coeff(k);
    const Coeff cb = b.coeff(k);
    if (!scale) {
      if (ca.is_zero() || cb.is_zero()) throw NotProportionalError(k);
      scale = cb / ca;
      continue;
    }
    if (!(ca * *scale == cb)) throw NotProportionalError(k);
  }
  if (!scale) throw Error(ErrorKind::InvalidArgument, "series share no window to compare on");
  return *scale;
}

ExpForm bessel_table_pairing(const Rational& nu, int sign) {
  const Rational s(sign >= 0 ? 1 : -1);
  ExpForm form;
  form.anchor = GeneralizedSeries::monomial(-s * nu);
  form.stages = {LinDiffOp::x(2), Resolvent{s * nu}};
  form.scale = Coeff(Rational(-1, 2));
  return form;
}

}  // namespace eulerode
