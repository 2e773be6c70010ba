#pragma once

#include <functional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "unischubert/polynomial.hpp"

namespace unischubert {

/// Overrides how a variable is spelled; return an empty string to fall back
/// to the default token.
using VariableNamer = std::function<std::string(const Variable&)>;

/// Default text token: c1(2), d1(2), g1[1], h1[1], x1, y1, q1. A q variable
/// of degree other than 2 is written q1{3}.
std::string variable_text(const Variable& v);
std::string variable_latex(const Variable& v);

/// Terms in decreasing term order, e.g. "c1(1)*c1(2) - c2(2)".
std::string to_text(const Polynomial& p, const VariableNamer& namer = {});
std::string to_latex(const Polynomial& p, const VariableNamer& namer = {});

/// Accepts +, -, *, ^, parentheses, integers and variable tokens; adjacent
/// factors multiply, so "c1(1)(d1(1)d1(2)-d2(2))" parses.
Polynomial parse_polynomial(std::string_view text);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

} // namespace unischubert
