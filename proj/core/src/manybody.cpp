#include "eulerode/manybody.hpp"

#include "eulerode/errors.hpp"

namespace eulerode {

SymPoly sutherland_apply(const Coeff& beta, const SymPoly& p) {
  const int n = p.nvars();
  const MPoly& q = p.poly();
  MPoly out(n);
  for (int i = 0; i < n; ++i) out = out + q.euler(i).euler(i);
  if (!beta.is_zero()) {
    MPoly pairs(n);
    for (int i = 0; i < n; ++i) {
      const MPoly di = q.euler(i);
      for (int j = i + 1; j < n; ++j) {
        const MPoly quotient = pair_divide(di - q.euler(j), i, j);
        pairs = pairs + (MPoly::variable(n, i) + MPoly::variable(n, j)) * quotient;
      }
    }
    out = out + pairs.scaled(beta);
  }
  return SymPoly::trusted(std::move(out));
}

std::size_t SutherlandMatrix::index_of(const Partition& mu) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == mu) return i;
  throw Error(ErrorKind::InvalidArgument, "partition " + mu.str() + " not in basis");
}

SutherlandMatrix sutherland_matrix(int weight, int nvars, const Coeff& beta) {
  SutherlandMatrix m;
  m.basis = partitions(weight, nvars);
  const std::size_t size = m.basis.size();
  m.entries.assign(size, std::vector<Coeff>(size, Coeff(0)));
  for (std::size_t c = 0; c < size; ++c) {
    const auto image = sutherland_apply(beta, msym(m.basis[c], nvars)).to_basis();
    for (const auto& [mu, value] : image) {
      const std::size_t r = m.index_of(mu);
      if (!dominated_by(mu, m.basis[c]))
        throw Error(ErrorKind::NotTriangular, "image of m" + m.basis[c].str() + " contains m" + mu.str() +
                                                  ", which it does not dominate");
      m.entries[r][c] = value;
    }
  }
  return m;
}

Coeff sutherland_diagonal_formula(const Partition& lambda, int nvars, const Coeff& beta) {
  Coeff out(0);
  const auto parts = lambda.padded(nvars);
  for (int i = 1; i <= nvars; ++i) {
    const int l = parts[static_cast<std::size_t>(i - 1)];
    out += Coeff(l * l) + beta * Coeff((nvars + 1 - 2 * i) * l);
  }
  return out;
}

JackResult jack(const Partition& lambda, int nvars, const Coeff& beta) {
  lambda.padded(nvars);  // TooManyParts
  const SutherlandMatrix m = sutherland_matrix(lambda.weight(), nvars, beta);
  const std::size_t top = m.index_of(lambda);

  JackResult out;
  out.lambda = lambda;
  out.nvars = nvars;
  out.basis = m.basis;
  out.eigenvalue_shift = m.diagonal(top);

  std::vector<Coeff> c(m.basis.size(), Coeff(0));
  c[top] = Coeff(1);
  // Rows after top in a linear extension of dominance; each row only sees
  // columns that dominate it, which come earlier.
  for (std::size_t r = top + 1; r < m.basis.size(); ++r) {
    const Partition& mu = m.basis[r];
    if (!dominated_by(mu, lambda)) continue;
    const Coeff gap = out.eigenvalue_shift - m.diagonal(r);
    if (gap.is_zero())
      throw Error(ErrorKind::DegenerateEigenvalue, "m" + mu.str() + " and m" + lambda.str() +
                                                       " share the eigenvalue " + out.eigenvalue_shift.str());
    Coeff rhs(0);
    for (std::size_t k = top; k < r; ++k)
      if (!c[k].is_zero() && !m.entries[r][k].is_zero()) rhs += m.entries[r][k] * c[k];
    c[r] = rhs / gap;
  }
  for (std::size_t r = 0; r < m.basis.size(); ++r)
    if (!c[r].is_zero()) out.coefficients.emplace(m.basis[r], c[r]);

  if (!jack_residual(out, beta).is_zero())
    throw Error(ErrorKind::ResidualNonzero, "Jack polynomial for " + lambda.str() + " fails its eigen-equation");
  return out;
}

SymPoly jack_residual(const JackResult& j, const Coeff& beta) {
  const SymPoly p = j.polynomial();
  return SymPoly::trusted(sutherland_apply(beta, p).poly() - p.poly().scaled(j.eigenvalue_shift));
}

Coeff sutherland_energy(const Partition& lambda, int nvars, const Coeff& beta) {
  const auto image = sutherland_apply(beta, msym(lambda, nvars)).to_basis();
  auto it = image.find(lambda);
  const Coeff diagonal = it == image.end() ? Coeff(0) : it->second;
  if (nvars == 2) {
    const Coeff formula = sutherland_diagonal_formula(lambda, 2, beta);
    if (!(formula == diagonal))
      throw Error(ErrorKind::ResidualNonzero, "two-particle energy formula disagrees with the operator diagonal");
    return formula;
  }
  return diagonal;
}

// ---------------------------------------------------------------------------

MPoly csm_A_apply(const Coeff& beta, const MPoly& p) {
  const int n = p.nvars();
  MPoly out(n);
  for (int i = 0; i < n; ++i) out = out + p.partial(i).partial(i);
  out = out.scaled(Coeff(Rational(1, 2)));
  if (!beta.is_zero()) {
    MPoly pairs(n);
    for (int i = 0; i < n; ++i) {
      const MPoly di = p.partial(i);
      for (int j = i + 1; j < n; ++j) pairs = pairs + pair_divide(di - p.partial(j), i, j);
    }
    out = out + pairs.scaled(beta);
  }
  return out;
}

Coeff csm_ground_energy(int nvars, const Coeff& beta) {
  return Coeff(Rational(nvars, 2)) + beta * Coeff(Rational(nvars * (nvars - 1), 2));
}

MPoly csm_exponential(const Partition& lambda, int nvars, const Coeff& beta, const Coeff& s) {
  MPoly term = msym(lambda, nvars).poly();
  MPoly acc = term;
  for (long m = 1; !term.is_zero(); ++m) {
    term = csm_A_apply(beta, term).scaled(s * Coeff(Rational(1, m)));
    acc = acc + term;
  }
  return acc;
}

MPoly csm_residual(const MPoly& P, int n, const Coeff& beta) {
  MPoly degree_part(P.nvars());
  for (int i = 0; i < P.nvars(); ++i) degree_part = degree_part + P.euler(i);
  return degree_part - P.scaled(Coeff(n)) - csm_A_apply(beta, P);
}

CsmState csm_state(const Partition& lambda, int nvars, const Coeff& beta) {
  CsmState out;
  out.polynomial = csm_exponential(lambda, nvars, beta, Coeff(Rational(-1, 2)));
  out.ground_energy = csm_ground_energy(nvars, beta);
  out.energy = out.ground_energy + Coeff(lambda.weight());
  if (!csm_residual(out.polynomial, lambda.weight(), beta).is_zero())
    throw Error(ErrorKind::ResidualNonzero, "CSM state for " + lambda.str() + " fails its equation");
  return out;
}

}  // namespace eulerode
