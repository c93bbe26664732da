#ifndef EULERODE_CLI_OP_EXPR_HPP
#define EULERODE_CLI_OP_EXPR_HPP

#include <string>
#include <vector>

#include "eulerode/rational.hpp"

namespace eulerode::cli {

// Operator-language syntax tree. Products are compositions: the rightmost
// factor acts first. Parentheses leave no trace; nested sums and products
// are flattened at parse time so printing and reparsing is the identity.
struct OpExpr {
  enum class Kind { RationalLit, Param, X, Dsmall, Dbig, Sum, Product, Negate };

  Kind kind = Kind::RationalLit;
  Rational value;                 // RationalLit
  std::string name;               // Param
  int power = 1;                  // X, Dsmall, Dbig
  std::vector<OpExpr> children;   // Sum, Product, Negate

  static OpExpr literal(const Rational& r);
  static OpExpr param(std::string name);
  static OpExpr atom(Kind k, int power);
  static OpExpr sum(std::vector<OpExpr> terms);
  static OpExpr product(std::vector<OpExpr> factors);
  static OpExpr negate(OpExpr e);

  friend bool operator==(const OpExpr&, const OpExpr&) = default;
};

//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := rational | identifier | 'x'['^'uint] | 'd'['^'uint]
//           | 'D'['^'uint] | '(' expr ')'
// A subtracted term is stored as Negate inside the Sum.
OpExpr parse_operator(const std::string& src);

// Canonical text; parse_operator(print_operator(e)) == e.
std::string print_operator(const OpExpr& e);

}  // namespace eulerode::cli

#endif  // EULERODE_CLI_OP_EXPR_HPP
