#include "oracles.hpp"

namespace eulerode::ref {

GeneralizedSeries hermite_explicit(int n) {
  GeneralizedSeries::Terms t;
  for (int m = 0; 2 * m <= n; ++m) {
    Rational c = factorial(n) / (factorial(m) * factorial(n - 2 * m));
    c = c * Rational(2).pow(static_cast<unsigned>(n - 2 * m));
    if (m % 2) c = -c;
    t[n - 2 * m] = c;
  }
  return GeneralizedSeries(Rational(0), std::move(t));
}

Rational gauss_taylor(int k) {
  if (k % 2) return Rational(0);
  const int m = k / 2;
  return Rational(-1, 2).pow(static_cast<unsigned>(m)) / factorial(m);
}

std::map<Rational, Coeff> naive_image(const LinDiffOp& op, const GeneralizedSeries& s) {
  std::map<Rational, Coeff> out;
  for (const auto& [k, c] : s.terms()) {
    for (const auto& m : op.monomials()) {
      Rational e = s.base() + Rational(static_cast<long>(k));
      Coeff v = c;
      for (int i = 0; i < m.dorder; ++i) {
        v = v * Coeff(e);
        e = e - Rational(1);
      }
      if (v.is_zero()) continue;
      out[e + Rational(m.xpow)] += v * m.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool naive_residual_zero(const LinDiffOp& op, const GeneralizedSeries& s) {
  const auto image = naive_image(op, s);
  if (s.is_exact()) return image.empty();
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& m : op.monomials()) {
    lo = first ? m.degree() : std::min(lo, m.degree());
    hi = first ? m.degree() : std::max(hi, m.degree());
    first = false;
  }
  const long K = static_cast<long>(*s.truncation_order());
  for (const auto& [e, c] : image) {
    const Rational j = e - s.base();
    const bool trusted = s.direction() == Direction::Ascending ? j < Rational(K + lo) : j > Rational(-K + hi);
    if (trusted) return false;
  }
  return true;
}

namespace {

Rational random_rational(std::mt19937& rng, int num_range, int max_den) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937& rng, int num_range, int max_den) {
  Rational r;
  do r = random_rational(rng, num_range, max_den);
  while (r.is_zero());
  return r;
}

}  // namespace

MasterCase random_master_case(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(1, 3);
  std::uniform_int_distribution<int> dorder(0, 2);
  std::uniform_int_distribution<int> which(0, 5);

  MasterCase mc;
  mc.ascending = coin(rng) == 1;
  mc.lambda = random_rational(rng, 6, 3);

  // Extra roots: behind lambda by a positive integer, or off the integer
  // lattice through lambda entirely.
  std::vector<Rational> roots{mc.lambda};
  const int extra = small(rng) - 1;
  for (int i = 0; i < extra; ++i) {
    if (coin(rng)) {
      const Rational step(small(rng));
      roots.push_back(mc.ascending ? mc.lambda - step : mc.lambda + step);
    } else {
      roots.push_back(mc.lambda + Rational(small(rng), 2) + Rational(1, 3));
    }
  }
  const Rational lead = random_nonzero(rng, 4, 2);
  LinDiffOp op = lead * EulerPoly::from_roots(roots).to_operator();

  const bool symbolic = which(rng) == 0;
  const int nterms = small(rng);
  for (int i = 0; i < nterms; ++i) {
    const int shift = small(rng);
    const int b = dorder(rng);
    const int xpow = mc.ascending ? shift + b : b;
    const int dord = mc.ascending ? b : b + shift;
    Coeff c = random_nonzero(rng, 5, 3);
    if (symbolic && i == 0) c = c * Coeff::parameter("E");
    op = op + LinDiffOp::mono(c, xpow, dord);
  }
  mc.op = op;
  return mc;
}

std::vector<Rational> parameter_taylor(const Coeff& c, int terms) {
  const ParamRatFunc f = c.as_ratfunc();
  const Rational d0 = f.den().coeff(0);
  std::vector<Rational> q;
  for (int n = 0; n < terms; ++n) {
    Rational acc = f.num().coeff(n);
    for (int k = 1; k <= n; ++k) acc = acc - f.den().coeff(k) * q[static_cast<std::size_t>(n - k)];
    q.push_back(acc / d0);
  }
  return q;
}

namespace {

Rational monomial_at(const std::vector<int>& e, const std::vector<Rational>& z) {
  Rational v(1);
  for (std::size_t i = 0; i < e.size(); ++i) v = v * z[i].pow(static_cast<unsigned>(e[i]));
  return v;
}

}  // namespace

Rational eval_at(const MPoly& p, const std::vector<Rational>& z) {
  Rational v(0);
  for (const auto& [e, c] : p.terms()) v = v + c.as_rational() * monomial_at(e, z);
  return v;
}

Rational sutherland_at(const Rational& beta, const MPoly& p, const std::vector<Rational>& z) {
  const std::size_t n = z.size();
  Rational out(0);
  for (const auto& [e, c] : p.terms()) {
    const Rational base = c.as_rational() * monomial_at(e, z);
    for (std::size_t i = 0; i < n; ++i) out = out + base * Rational(e[i] * e[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        out = out + beta * (z[i] + z[j]) / (z[i] - z[j]) * base * Rational(e[i] - e[j]);
  }
  return out;
}

Rational csm_A_at(const Rational& beta, const MPoly& p, const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  auto lowered = [](std::vector<int> e, std::size_t i, int by) {
    e[i] -= by;
    return e;
  };
  Rational out(0);
  for (const auto& [e, c] : p.terms()) {
    const Rational cr = c.as_rational();
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] >= 2) out = out + Rational(1, 2) * cr * Rational(e[i] * (e[i] - 1)) * monomial_at(lowered(e, i, 2), x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational diff(0);
        if (e[i] >= 1) diff = diff + Rational(e[i]) * monomial_at(lowered(e, i, 1), x);
        if (e[j] >= 1) diff = diff - Rational(e[j]) * monomial_at(lowered(e, j, 1), x);
        out = out + beta * cr * diff / (x[i] - x[j]);
      }
    }
  }
  return out;
}

}  // namespace eulerode::ref
