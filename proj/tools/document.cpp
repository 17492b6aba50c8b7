#include "document.hpp"

#include <stdexcept>

#include "faulhaber/centralfact.hpp"
#include "faulhaber/powersum.hpp"

namespace faulhaber::cli {

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.contains(name))
        throw std::invalid_argument(std::string("document is missing \"") + name + "\"");
    return j.at(name);
}

std::string text(const json& j, const char* name)
{
    const json& f = field(j, name);
    if (!f.is_string())
        throw std::invalid_argument(std::string("\"") + name + "\" must be a string");
    return f.get<std::string>();
}

unsigned small_uint(const json& meta, const char* name)
{
    const long v = std::stol(text(meta, name));
    if (v < 0)
        throw std::invalid_argument(std::string("\"") + name + "\" must be non-negative");
    return static_cast<unsigned>(v);
}

} // namespace

Integer common_denominator(const std::vector<Rational>& cs)
{
    Integer d = 1;
    for (const auto& c : cs)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
    return d;
}

json rational_list(const std::vector<Rational>& cs)
{
    json out = json::array();
    for (const auto& c : cs)
        out.push_back(c.to_string());
    return out;
}

std::vector<Rational> parse_rational_list(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected an array of rational strings");
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw std::invalid_argument("rationals are serialized as strings");
        out.push_back(Rational::parse(e.get<std::string>()));
    }
    return out;
}

json to_json(const OutputDocument& doc)
{
    const Integer d = common_denominator(doc.coefficients);
    json numerators = json::array();
    for (const auto& c : doc.coefficients)
        numerators.push_back((c * Rational(d)).numerator().get_str());
    json j;
    j["command"] = doc.command;
    j["kind"] = doc.kind;
    j["variable"] = doc.variable;
    j["denominator"] = d.get_str();
    j["numerators"] = std::move(numerators);
    j["coefficients"] = rational_list(doc.coefficients);
    j["metadata"] = doc.metadata;
    return j;
}

OutputDocument from_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("document must be a JSON object");
    OutputDocument doc;
    doc.command = text(j, "command");
    doc.kind = text(j, "kind");
    doc.variable = text(j, "variable");
    doc.coefficients = parse_rational_list(field(j, "coefficients"));
    doc.metadata = j.contains("metadata") ? j.at("metadata") : json::object();

    const Integer d = parse_integer(text(j, "denominator"));
    const json& nums = field(j, "numerators");
    if (!nums.is_array() || nums.size() != doc.coefficients.size())
        throw std::invalid_argument("numerators and coefficients differ in length");
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (!nums[i].is_string())
            throw std::invalid_argument("numerators are serialized as strings");
        if (Rational(parse_integer(nums[i].get<std::string>()), d) != doc.coefficients[i])
            throw std::invalid_argument("numerator " + std::to_string(i) + " disagrees with its coefficient");
    }
    return doc;
}

OutputDocument polynomial_document(std::string command, std::string kind, const Polynomial& p)
{
    OutputDocument doc;
    doc.command = std::move(command);
    doc.kind = std::move(kind);
    doc.variable = std::string(var_name(p.var()));
    doc.coefficients = p.coeffs();
    return doc;
}

Polynomial rebuild_powersum(const OutputDocument& doc)
{
    if (doc.kind != "powersum")
        throw std::invalid_argument("not a powersum document");
    const std::string basis = text(doc.metadata, "basis");
    const unsigned r = small_uint(doc.metadata, "r");
    const auto& cs = doc.coefficients;

    if (basis == "n")
        return Polynomial(parse_var(doc.variable), cs);
    if (basis == "faulhaber") {
        const std::string factor = text(doc.metadata, "factor");
        FaulhaberForm form;
        form.r = r;
        form.g = Polynomial(Var::N, cs);
        if (factor == "sum^r n^1")
            form.factor = FactorKind::first_powers;
        else if (factor == "sum^r n^2")
            form.factor = FactorKind::squares;
        else
            throw std::invalid_argument("unknown factor: " + factor);
        return form.expand();
    }
    if (basis == "cfactorial") {
        if (doc.variable == "T_k")
            return even_powersum_cf_polynomial(cs);
        if (doc.variable != "C(n+k-1+r,2k-1+r)")
            throw std::invalid_argument("unknown central factorial variable: " + doc.variable);
        Polynomial p(Var::n);
        for (std::size_t k = 1; k <= cs.size(); ++k)
            p += central_binomial(static_cast<unsigned>(k), r - 1) * cs[k - 1];
        return p;
    }
    if (basis == "stirling") {
        StirlingExpansion e;
        for (const auto& c : cs) {
            if (!c.is_integer())
                throw std::invalid_argument("Stirling coefficients are integers");
            e.rising.push_back(c.numerator());
        }
        return stirling_rising_polynomial(e);
    }
    throw std::invalid_argument("unknown basis: " + basis);
}

} // namespace faulhaber::cli
