#ifndef EULERODE_MPOLY_HPP
#define EULERODE_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "eulerode/coeff.hpp"
#include "eulerode/partition.hpp"

namespace eulerode {

using Exponents = std::vector<int>;

// Polynomial in N variables z_1..z_N over Coeff, sparse by exponent vector.
class MPoly {
 public:
  using Terms = std::map<Exponents, Coeff>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}
  MPoly(int nvars, Terms terms);

  static MPoly constant(int nvars, const Coeff& c);
  static MPoly variable(int nvars, int index);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const Exponents& e) const;
  // Maximum total degree; -1 for zero.
  int total_degree() const;

  // Variables i and j exchanged.
  MPoly swapped(int i, int j) const;
  bool is_symmetric() const;

  // z_i d/dz_i.
  MPoly euler(int i) const;
  // d/dz_i.
  MPoly partial(int i) const;

  MPoly scaled(const Coeff& s) const;

  std::string str(const std::string& var = "z") const;

  MPoly operator-() const { return scaled(Coeff(-1)); }
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void add(const Exponents& e, const Coeff& c);

  int n_ = 0;
  Terms terms_;
};

// Polynomial known to be invariant under every permutation of its variables.
class SymPoly {
 public:
  SymPoly() = default;
  // NotSymmetric if p is not permutation invariant.
  explicit SymPoly(MPoly p);

  // Skips the symmetry check; for results of symmetry-preserving maps.
  static SymPoly trusted(MPoly p);
  // sum_mu coeffs[mu] m_mu.
  static SymPoly from_basis(int nvars, const std::map<Partition, Coeff>& coeffs);

  const MPoly& poly() const { return p_; }
  int nvars() const { return p_.nvars(); }
  bool is_zero() const { return p_.is_zero(); }

  // Coordinates in the monomial symmetric basis m_mu.
  std::map<Partition, Coeff> to_basis() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  MPoly p_;
};

// Monomial symmetric function m_lambda in N variables: the sum of all
// distinct permutations of z^lambda. TooManyParts if lambda has more than
// N nonzero parts.
SymPoly msym(const Partition& lambda, int nvars);

// Exact quotient q with (z_i - z_j) q = p. NotDivisible if the division
// leaves a remainder, which means p was not antisymmetric in (i, j).
MPoly pair_divide(const MPoly& p, int i, int j);

}  // namespace eulerode

#endif  // EULERODE_MPOLY_HPP
