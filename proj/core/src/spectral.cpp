#include "eulerode/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace eulerode {

namespace {

LinDiffOp mono(const Coeff& c, int a, int b) { return LinDiffOp::mono(c, a, b); }

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Real roots of E^3 - alpha E - c, ascending, by bisection on monotone pieces.
std::vector<double> cubic_real_roots(double alpha, double c) {
  const auto f = [&](double e) { return e * e * e - alpha * e - c; };
  const double bound = 1.0 + std::max(std::abs(alpha), std::abs(c));
  std::vector<double> cuts{-bound};
  if (alpha > 0) {
    const double s = std::sqrt(alpha / 3.0);
    cuts.push_back(-s);
    cuts.push_back(s);
  }
  cuts.push_back(bound);
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) roots.push_back(lo);
    else if (fhi != 0.0 && (flo < 0) != (fhi < 0)) roots.push_back(bisect(f, lo, hi));
    if (i + 2 == cuts.size() && fhi == 0.0) roots.push_back(hi);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12 * (1 + std::abs(a)); }),
              roots.end());
  return roots;
}

ParamPoly coefficient_poly(const GeneralizedSeries& s, std::int64_t offset) {
  return s.coeff(offset).as_poly().with_name(kEnergy);
}

}  // namespace

LinDiffOp oscillator_operator(const Coeff& energy) {
  return mono(1, 2, 2) + mono(Coeff(2) * energy, 2, 0) + mono(-1, 4, 0);
}

LinDiffOp gauge_reduced_oscillator(const Rational& alpha) {
  return LinDiffOp::euler() + LinDiffOp::scalar(Coeff(-alpha)) + mono(Rational(-1, 2), 0, 2);
}

GeneralizedSeries oscillator_series(int K, int sector) {
  if (K < 2) throw Error(ErrorKind::InvalidArgument, "oscillator series needs K >= 2");
  if (sector != 0 && sector != 1) throw Error(ErrorKind::InvalidArgument, "sector must be 0 or 1");
  return master_solve(oscillator_operator(), Rational(sector), K).solution;
}

Rational oscillator_quantize(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "quantum number must be nonnegative");
  const LinDiffOp op = gauge_reduced_oscillator(Rational(n));
  const SolveReport report = master_solve(op, Rational(n), n + 2);
  if (report.status != SolveStatus::Terminated || !residual(op, report.solution).is_zero())
    throw Error(ErrorKind::ResidualNonzero, "oscillator series failed to terminate at n = " + std::to_string(n));
  return Rational(n) + Rational(1, 2);
}

// ---------------------------------------------------------------------------

std::string QesResult::gauge() const { return "exp(-" + b.str() + "*x^4)"; }

NonRationalRootError::NonRationalRootError(ParamPoly poly, std::vector<Rational> rational_part)
    : Error(ErrorKind::NonRationalRoot,
            "termination polynomial " + poly.str() + " has roots outside Q"),
      poly_(std::move(poly)),
      rational_(std::move(rational_part)) {}

LinDiffOp sextic_operator(int n, const Rational& g, const Coeff& energy) {
  return mono(1, 2, 2) + mono(energy, 2, 0) + mono(Coeff(Rational(2 * n) * g), 4, 0) +
         mono(Coeff(Rational(-2) * g), 5, 1);
}

QesResult sextic_qes(int n, const Rational& g, int K) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (g.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "coupling g must be positive");
  if (K <= n + 2) throw Error(ErrorKind::InvalidArgument, "K must exceed n + 2");

  QesResult out;
  out.n = n;
  out.g = g;
  out.gamma = g * g;
  out.alpha = -Rational(2 * n + 3) * g;
  out.b = g / Rational(4);
  out.sector = n % 2;

  const LinDiffOp op = sextic_operator(n, g);
  out.series = master_solve(op, Rational(out.sector), K).solution;
  const std::int64_t cut = n + 2 - out.sector;  // offset of x^(n+2)
  out.termination_poly = coefficient_poly(out.series, cut);

  const auto roots = rational_roots(out.termination_poly);
  int represented = 0;
  std::vector<Rational> values;
  for (const auto& r : roots) {
    represented += r.multiplicity;
    values.push_back(r.value);
  }
  if (represented < out.termination_poly.degree())
    throw NonRationalRootError(out.termination_poly, values);
  out.spectrum = values;

  for (const Rational& e : values) {
    const GeneralizedSeries at = out.series.evaluated(e);
    for (const auto& [k, c] : at.terms())
      if (k >= cut)
        throw Error(ErrorKind::ResidualNonzero, "coefficient at offset " + std::to_string(k) +
                                                    " survives at E = " + e.str());
    GeneralizedSeries psi = at.with_truncation(std::nullopt, Direction::Ascending);
    if (psi.coeff(n - out.sector).is_zero())
      throw Error(ErrorKind::ResidualNonzero, "eigenfunction at E = " + e.str() + " has degree below n");
    if (!apply(sextic_operator(n, g, Coeff(e)), psi).is_zero())
      throw Error(ErrorKind::ResidualNonzero, "eigenfunction at E = " + e.str() + " fails the equation");
    out.eigenfunctions.push_back({e, std::move(psi)});
  }
  return out;
}

// ---------------------------------------------------------------------------

LinDiffOp anharmonic_operator(const Rational& alpha, const Rational& beta, const Coeff& energy) {
  return mono(1, 2, 2) + mono(energy, 2, 0) + mono(Coeff(-alpha), 4, 0) + mono(Coeff(-beta), 6, 0);
}

AnharmonicResult anharmonic_approx(const Rational& alpha, const Rational& beta, int K) {
  if (beta.sign() < 0) throw Error(ErrorKind::InvalidArgument, "beta must be nonnegative");
  if (K < 8) throw Error(ErrorKind::InvalidArgument, "anharmonic matching needs K >= 8");

  AnharmonicResult out;
  out.alpha = alpha;
  out.beta = beta;
  out.series = master_solve(anharmonic_operator(alpha, beta), Rational(0), K).solution;

  // exp(-mu x^2 - nu x^4) = 1 - mu x^2 + (mu^2/2 - nu) x^4 + (mu nu - mu^3/6) x^6 + ...
  const ParamPoly c2 = coefficient_poly(out.series, 2);
  const ParamPoly c4 = coefficient_poly(out.series, 4);
  const ParamPoly c6 = coefficient_poly(out.series, 6);
  out.mu_of_E = -c2;
  out.nu_of_E = (out.mu_of_E * out.mu_of_E).scaled(Rational(1, 2)) - c4;
  const ParamPoly mu3 = out.mu_of_E * out.mu_of_E * out.mu_of_E;
  out.cubic = (out.mu_of_E * out.nu_of_E - mu3.scaled(Rational(1, 6)) - c6).monic();

  const double a = alpha.to_double();
  const double b = beta.to_double();
  const double c = 1.5 * b;
  out.real_roots = cubic_real_roots(a, c);

  const double disc = 1640.25 * b * b - 108.0 * a * a * a;
  out.complex_intermediate = disc < 0;
  const double cbrt2 = std::cbrt(2.0);
  std::complex<double> A;
  if (disc >= 0) A = std::cbrt(40.5 * b + std::sqrt(disc));
  else A = std::pow(std::complex<double>(40.5 * b, std::sqrt(-disc)), 1.0 / 3.0);
  if (std::abs(A) > 0) {
    const std::complex<double> e = cbrt2 * a / A + A / (3.0 * cbrt2);
    out.closed_form_root = e.real();
    out.closed_form_imag = e.imag();
  } else {
    out.closed_form_root = std::numeric_limits<double>::quiet_NaN();
  }

  if (beta.is_zero()) {
    // E^3 = alpha E: no positive-beta selection rule applies.
    out.method = RootMethod::Bisection;
    out.root_selected = out.real_roots.size() == 1;
    out.bisection_root = out.real_roots.back();
    out.E0 = out.root_selected ? out.bisection_root : std::numeric_limits<double>::quiet_NaN();
  } else {
    // Largest real root; f is increasing to the right of sqrt(alpha/3) and
    // negative there because beta > 0.
    const auto f = [&](double e) { return e * e * e - a * e - c; };
    const double lo = a > 0 ? std::sqrt(a / 3.0) : 0.0;
    const double hi = 1.0 + std::max(std::abs(a), std::abs(c));
    out.bisection_root = bisect(f, lo, hi);
    out.method = out.complex_intermediate ? RootMethod::Bisection : RootMethod::ClosedForm;
    out.E0 = out.method == RootMethod::ClosedForm ? out.closed_form_root : out.bisection_root;
  }
  out.mu = out.E0 / 2.0;
  out.nu = out.nu_of_E.eval(out.E0);
  return out;
}

}  // namespace eulerode
