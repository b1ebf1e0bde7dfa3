#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "binform/polynomial.hpp"

namespace binform {

enum class PolyStyle { plain, latex, json };

// Expression grammar: integers, rationals p/q, variables a0..d9 / a{12} / x /
// X / Y, operators + - * ^, parentheses; whitespace insignificant.  When
// max_index is given, coefficient indices are range-checked against it.
Polynomial parse_polynomial(std::string_view text, std::optional<unsigned> max_index = std::nullopt);

// Deterministic rendering in the canonical term order; plain output round-trips
// through parse_polynomial.
std::string format_polynomial(const Polynomial& p, PolyStyle style = PolyStyle::plain);

nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::optional<unsigned> max_index = std::nullopt);

}  // namespace binform
