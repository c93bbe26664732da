#ifndef EULERODE_MANYBODY_HPP
#define EULERODE_MANYBODY_HPP

#include <map>
#include <vector>

#include "eulerode/coeff.hpp"
#include "eulerode/mpoly.hpp"
#include "eulerode/partition.hpp"

namespace eulerode {

// --- Sutherland model (gauge-reduced, z_j = exp(2 pi i x_j / L)) -------------

// sum_i D_i^2 p + beta sum_{i<j} (z_i + z_j)/(z_i - z_j) (D_i - D_j) p with
// D_i = z_i d/dz_i. The fraction is never formed: (D_i - D_j) p is
// antisymmetric in (i, j) and is divided by (z_i - z_j) exactly first.
SymPoly sutherland_apply(const Coeff& beta, const SymPoly& p);

// Matrix of sutherland_apply on the m-basis of one weight, basis in reverse
// lexicographic order. entries[r][c] is the coefficient of m_basis[r] in
// the image of m_basis[c].
struct SutherlandMatrix {
  std::vector<Partition> basis;
  std::vector<std::vector<Coeff>> entries;

  const Coeff& diagonal(std::size_t i) const { return entries[i][i]; }
  std::size_t index_of(const Partition& mu) const;
};

// Builds the matrix and checks that it is triangular with respect to
// dominance (NotTriangular otherwise).
SutherlandMatrix sutherland_matrix(int weight, int nvars, const Coeff& beta);

// sum_i (lambda_i^2 + beta (N + 1 - 2i) lambda_i), i counted from 1.
Coeff sutherland_diagonal_formula(const Partition& lambda, int nvars, const Coeff& beta);

struct JackResult {
  Partition lambda;
  int nvars = 0;
  // m-basis coordinates (only partitions dominated by lambda), with the
  // coefficient of m_lambda equal to 1.
  std::map<Partition, Coeff> coefficients;
  // E~_lambda - E~_0, the diagonal entry of the matrix at m_lambda.
  Coeff eigenvalue_shift;
  // Basis order used for the solve, for deterministic output.
  std::vector<Partition> basis;

  SymPoly polynomial() const { return SymPoly::from_basis(nvars, coefficients); }
};

// Jack polynomial by back-substitution in the triangular m-basis matrix.
// DegenerateEigenvalue if some mu strictly dominated by lambda has the same
// diagonal entry; ResidualNonzero if the assembled polynomial fails the
// eigenvalue equation.
JackResult jack(const Partition& lambda, int nvars, const Coeff& beta);

// sutherland_apply(J) - shift * J for a Jack result.
SymPoly jack_residual(const JackResult& j, const Coeff& beta);

// E~_lambda - E~_0. For two particles the closed formula is checked against
// the matrix diagonal (ResidualNonzero if they disagree); otherwise the
// diagonal entry is returned.
Coeff sutherland_energy(const Partition& lambda, int nvars, const Coeff& beta);

// --- Calogero-Sutherland model on the line ---------------------------------

// A(beta) p = 1/2 sum_i d^2 p/dx_i^2 + beta sum_{i<j} (d_i - d_j) p / (x_i - x_j).
MPoly csm_A_apply(const Coeff& beta, const MPoly& p);

// E_0 = N/2 + beta N (N - 1)/2.
Coeff csm_ground_energy(int nvars, const Coeff& beta);

// sum_m (s A)^m / m! applied to m_lambda; terminates since A lowers the
// degree by two.
MPoly csm_exponential(const Partition& lambda, int nvars, const Coeff& beta, const Coeff& s);

// [sum_i x_i d_i - n - A] P.
MPoly csm_residual(const MPoly& P, int n, const Coeff& beta);

struct CsmState {
  MPoly polynomial;
  Coeff energy;         // E_0 + n
  Coeff ground_energy;  // E_0
};

// P = exp(-A/2) m_lambda with E = E_0 + |lambda|, certified by a zero
// residual (ResidualNonzero otherwise).
CsmState csm_state(const Partition& lambda, int nvars, const Coeff& beta);

}  // namespace eulerode

#endif  // EULERODE_MANYBODY_HPP
