#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "shapes/polynomial.hpp"
#include "shapes/qseries.hpp"
#include "shapes/shapegen.hpp"

namespace shapes {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// {"lowest": int, "coeffs": [...]}; coefficients that fit in 64 bits are
// numbers, larger ones decimal strings. Truncated series add "truncation".
Json to_json(const GradedQPolynomial& p);
GradedQPolynomial q_polynomial_from_json(const Json& j);

// {"format_version", "N", "d", "terms": [{"matrix": [[...]], "coeff": "p/q"}]}
// with terms in ascending monomial order.
Json to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const Json& j);

// Header {N, d, statistics, shape_polynomial, max_grade} and per shape its
// grade, index, the orbital lists of its support states and their
// coefficients. Reading rebuilds the level bases.
Json to_json(const ShapeCatalog& c);
ShapeCatalog catalog_from_json(const Json& j, std::size_t state_cap = kDefaultStateCap);

Json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline; byte-identical for equal input.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace shapes
