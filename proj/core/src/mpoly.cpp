#include "eulerode/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "eulerode/errors.hpp"

namespace eulerode {

MPoly::MPoly(int nvars, Terms terms) : n_(nvars) {
  for (const auto& [e, c] : terms) add(e, c);
}

MPoly MPoly::constant(int nvars, const Coeff& c) {
  MPoly p(nvars);
  p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  p.add(e, Coeff(1));
  return p;
}

void MPoly::add(const Exponents& e, const Coeff& c) {
  if (static_cast<int>(e.size()) != n_)
    throw Error(ErrorKind::InvalidArgument, "exponent vector length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coeff MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int MPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    deg = std::max(deg, s);
  }
  return deg;
}

MPoly MPoly::swapped(int i, int j) const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    out.add(f, c);
  }
  return out;
}

bool MPoly::is_symmetric() const {
  // Adjacent transpositions generate the symmetric group.
  for (int i = 0; i + 1 < n_; ++i)
    if (!(swapped(i, i + 1) == *this)) return false;
  return true;
}

MPoly MPoly::euler(int i) const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k != 0) out.add(e, c * Coeff(k));
  }
  return out;
}

MPoly MPoly::partial(int i) const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    Exponents f = e;
    --f[static_cast<std::size_t>(i)];
    out.add(f, c * Coeff(k));
  }
  return out;
}

MPoly MPoly::scaled(const Coeff& s) const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) out.add(e, c * s);
  return out;
}

std::string MPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.is_rational() && c.as_rational().sign() < 0;
    std::string cs = negative ? (-c).str() : c.str();
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (cs != "1" || constant) factors.push_back(cs);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      std::string f = var + std::to_string(k + 1);
      if (e[k] > 1) f += "^" + std::to_string(e[k]);
      factors.push_back(f);
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  MPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  MPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add(e, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SymPoly::SymPoly(MPoly p) : p_(std::move(p)) {
  if (!p_.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric: " + p_.str());
}

SymPoly SymPoly::trusted(MPoly p) {
  SymPoly s;
  s.p_ = std::move(p);
  return s;
}

SymPoly SymPoly::from_basis(int nvars, const std::map<Partition, Coeff>& coeffs) {
  MPoly acc(nvars);
  for (const auto& [mu, c] : coeffs) acc = acc + msym(mu, nvars).poly().scaled(c);
  return trusted(std::move(acc));
}

std::map<Partition, Coeff> SymPoly::to_basis() const {
  std::map<Partition, Coeff> out;
  for (const auto& [e, c] : p_.terms()) {
    // Each m_mu contains z^mu with mu sorted decreasing exactly once.
    if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
    out.emplace(Partition(e), c);
  }
  return out;
}

SymPoly msym(const Partition& lambda, int nvars) {
  Exponents e = lambda.padded(nvars);
  std::sort(e.begin(), e.end());
  MPoly::Terms terms;
  do {
    terms.emplace(e, Coeff(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return SymPoly::trusted(MPoly(nvars, std::move(terms)));
}

MPoly pair_divide(const MPoly& p, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= p.nvars() || j >= p.nvars())
    throw Error(ErrorKind::InvalidArgument, "pair_divide needs two distinct variable indices");
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);

  // Synthetic division in z_i: c z_i^a m = (z_i - z_j) c z_i^(a-1) m + c z_i^(a-1) z_j m.
  std::map<Exponents, Coeff> work(p.terms().begin(), p.terms().end());
  MPoly::Terms quotient;
  int level = 0;
  for (const auto& [e, c] : work) level = std::max(level, e[ui]);
  for (; level > 0; --level) {
    std::vector<std::pair<Exponents, Coeff>> row;
    for (const auto& [e, c] : work)
      if (e[ui] == level) row.emplace_back(e, c);
    for (const auto& [e, c] : row) {
      work.erase(e);
      Exponents q = e;
      --q[ui];
      auto [qit, qnew] = quotient.emplace(q, c);
      if (!qnew) qit->second += c;
      Exponents carry = q;
      ++carry[uj];
      auto [wit, wnew] = work.emplace(carry, c);
      if (!wnew) {
        wit->second += c;
        if (wit->second.is_zero()) work.erase(wit);
      }
    }
  }
  for (const auto& [e, c] : work)
    if (!c.is_zero())
      throw Error(ErrorKind::NotDivisible, "polynomial is not divisible by (z" + std::to_string(i + 1) +
                                               " - z" + std::to_string(j + 1) + ")");
  return MPoly(p.nvars(), std::move(quotient));
}

}  // namespace eulerode
