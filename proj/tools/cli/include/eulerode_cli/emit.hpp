#ifndef EULERODE_CLI_EMIT_HPP
#define EULERODE_CLI_EMIT_HPP

#include <string>

#include <json.hpp>

#include "eulerode/exp_form.hpp"
#include "eulerode/operator.hpp"
#include "eulerode/series.hpp"

namespace eulerode::cli {

using Json = nlohmann::ordered_json;

// {"base_exponent", "terms": [{"offset", "coeff"}], "status", "meta"}.
// Truncated series also record truncation_order and direction in meta.
Json solution_json(const GeneralizedSeries& s, Json meta = Json::object());

// Inverse of solution_json. InvalidArgument on a malformed document.
GeneralizedSeries series_from_json(const Json& doc);

// %.17g, for the explicitly approximate numbers.
std::string approx(double v);

std::string latex_coeff(const Coeff& c);
std::string latex_series(const GeneralizedSeries& s);
std::string latex_operator(const LinDiffOp& op);
std::string latex_euler(const EulerPoly& F);
std::string latex_exp_form(const ExpForm& form);

}  // namespace eulerode::cli

#endif  // EULERODE_CLI_EMIT_HPP
