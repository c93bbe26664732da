#ifndef EULERODE_CLI_ELABORATE_HPP
#define EULERODE_CLI_ELABORATE_HPP

#include <map>
#include <optional>
#include <string>

#include "eulerode/operator.hpp"
#include "eulerode_cli/op_expr.hpp"

namespace eulerode::cli {

struct Bindings {
  std::map<std::string, Rational> values;
  // The one parameter allowed to stay symbolic.
  std::optional<std::string> free;
};

// Normal-ordered operator for e. D becomes x*d. UnboundParameter if a name
// is neither bound nor free (and no free name was given); TwoFreeParameters
// if a free name was given and another name is unbound as well.
LinDiffOp elaborate(const OpExpr& e, const Bindings& bindings);

// parse_operator followed by elaborate.
LinDiffOp parse_and_elaborate(const std::string& src, const Bindings& bindings);

}  // namespace eulerode::cli

#endif  // EULERODE_CLI_ELABORATE_HPP
