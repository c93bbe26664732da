#ifndef EULERODE_CLI_COEFF_PARSE_HPP
#define EULERODE_CLI_COEFF_PARSE_HPP

#include <string>

#include "eulerode/coeff.hpp"

namespace eulerode::cli {

// Reads a coefficient as Coeff::str() writes it: "3/2", "1-1/2*E^2",
// "(2*b)/(1+b)". Accepts + - * / ^ (integer exponents on names), unary
// minus and parentheses. ParseError on bad syntax; ParameterMismatch if two
// different names appear.
Coeff parse_coeff(const std::string& src);

}  // namespace eulerode::cli

#endif  // EULERODE_CLI_COEFF_PARSE_HPP
