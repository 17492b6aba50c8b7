#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber::cli {

using json = nlohmann::ordered_json;

/// One CLI result. Coefficients are listed in ascending order of whatever
/// the `variable` tag indexes (a power, a basis element, or a table slot).
struct OutputDocument {
    std::string command;
    std::string kind;
    std::string variable;
    std::vector<Rational> coefficients;
    json metadata = json::object();
};

/// {"command", "kind", "variable", "denominator", "numerators",
///  "coefficients", "metadata"}; all numbers are decimal strings.
json to_json(const OutputDocument& doc);

/// Throws std::invalid_argument when fields are missing or the numerators
/// disagree with the coefficients.
OutputDocument from_json(const json& j);

/// Least common denominator of the coefficients (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& cs);

json rational_list(const std::vector<Rational>& cs);
std::vector<Rational> parse_rational_list(const json& j);

/// Documents of kind "powersum" re-expanded as a polynomial in n; the basis
/// and r are read from the metadata.
Polynomial rebuild_powersum(const OutputDocument& doc);

OutputDocument polynomial_document(std::string command, std::string kind, const Polynomial& p);

} // namespace faulhaber::cli
