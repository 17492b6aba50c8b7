#include "commands.hpp"

#include <sstream>
#include <stdexcept>

#include "faulhaber/asymptotic.hpp"
#include "faulhaber/centralfact.hpp"
#include "faulhaber/faulcoeff.hpp"
#include "faulhaber/powersum.hpp"
#include "faulhaber/reflect.hpp"
#include "faulhaber/riddle.hpp"
#include "faulhaber/verify.hpp"

namespace faulhaber::cli {

namespace {

std::string join(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += ' ';
        out += p;
    }
    return out;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& xs)
{
    return {xs.begin(), xs.end()};
}

json integer_list(const std::vector<Integer>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(x.get_str());
    return out;
}

unsigned integer_w(const Rational& w)
{
    if (!w.is_integer() || w.sign() <= 0)
        throw DomainError("method explicit needs a positive integer w");
    return static_cast<unsigned>(w.numerator().get_ui());
}

std::vector<Rational> coefficients_by(const std::string& method, const Rational& w, unsigned k)
{
    if (method == "recurrence")
        return a_by_recurrence(w, k).entries;
    if (method == "jacobi")
        return a_by_jacobi(w, k).entries;
    if (method == "symbolic") {
        std::vector<Rational> out;
        for (const auto& p : a_symbolic_table(k))
            out.push_back(p(w));
        return out;
    }
    if (method == "explicit") {
        const unsigned m = integer_w(w);
        if (k >= m)
            throw DomainError("method explicit needs k < w");
        std::vector<Rational> out;
        for (unsigned j = 0; j <= k; ++j)
            out.push_back(a_explicit(m, j));
        return out;
    }
    if (method == "determinant") {
        std::vector<Rational> out;
        for (unsigned j = 0; j <= k; ++j) {
            const auto r = a_by_determinant(w, j);
            if (!r.A)
                throw DomainError("determinant route divides by zero at k = " + std::to_string(j) +
                                  " for w = " + w.to_string());
            out.push_back(*r.A);
        }
        return out;
    }
    throw std::invalid_argument("unknown method: " + method);
}

json factor_json(const PrimitiveForm& f)
{
    return {{"numerators", integer_list(f.numerators)}, {"denominator", f.denominator.get_str()}};
}

json scaled_json(const ScaledCoefficients& s)
{
    return {{"scale", s.scale.to_string()}, {"values", integer_list(s.values)}};
}

void render_value(std::ostringstream& os, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object()) {
                os << pad << key << ":\n";
                render_value(os, value, indent + 2);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << '\n';
            }
        }
    }
}

} // namespace

CommandOutput run_powersum(unsigned m, unsigned r, const std::string& basis)
{
    const std::string command =
        join({"powersum", "--m", std::to_string(m), "--r", std::to_string(r), "--basis", basis});
    OutputDocument doc;
    doc.command = command;
    doc.kind = "powersum";
    doc.metadata["basis"] = basis;
    doc.metadata["m"] = std::to_string(m);
    doc.metadata["r"] = std::to_string(r);

    if (basis == "n") {
        const Polynomial p = power_sum(m, r);
        doc.variable = "n";
        doc.coefficients = p.coeffs();
    } else if (basis == "faulhaber") {
        const FaulhaberForm form = to_faulhaber_form(m, r);
        doc.variable = "N";
        doc.coefficients = form.g.coeffs();
        doc.metadata["factor"] =
            form.factor == FactorKind::first_powers ? "sum^r n^1" : "sum^r n^2";
        doc.metadata["N"] = "(n^2 + r n)/2";
    } else if (basis == "cfactorial") {
        if (r < 1)
            throw DomainError("basis cfactorial needs r >= 1");
        if (m % 2 == 1) {
            doc.variable = "C(n+k-1+r,2k-1+r)";
            doc.coefficients = to_rationals(odd_powersum_cf((m + 1) / 2));
        } else {
            if (r != 1 || m == 0)
                throw DomainError("basis cfactorial for even m needs m >= 2 and r = 1");
            doc.variable = "T_k";
            doc.coefficients = even_powersum_cf(m / 2);
        }
    } else if (basis == "stirling") {
        if (r != 1 || m == 0)
            throw DomainError("basis stirling needs m >= 1 and r = 1");
        const StirlingExpansion e = stirling_expansion(m);
        doc.variable = "C(n+1,k+1)";
        doc.coefficients = to_rationals(e.rising);
        doc.metadata["alternating"] = integer_list(e.alternating);
        doc.metadata["alternating_variable"] = "C(n+k,k+1)";
    } else {
        throw std::invalid_argument("unknown basis: " + basis);
    }
    doc.metadata["polynomial"] = to_string(power_sum(m, r));
    return {to_json(doc), 0};
}

CommandOutput run_coeffs(const Rational& w, unsigned k, const std::string& method)
{
    OutputDocument doc;
    doc.command = join({"coeffs", "--w", w.to_string(), "--k", std::to_string(k), "--method", method});
    doc.kind = "coefficients";
    doc.variable = "k";
    doc.coefficients = coefficients_by(method, w, k);
    doc.metadata["w"] = w.to_string();
    doc.metadata["method"] = method;
    return {to_json(doc), 0};
}

CommandOutput run_coeffs_cross_check(const Rational& w, unsigned k)
{
    OutputDocument doc;
    doc.command = join({"coeffs", "--w", w.to_string(), "--k", std::to_string(k), "--cross-check"});
    doc.kind = "cross_check";
    doc.variable = "k";
    doc.coefficients = a_by_recurrence(w, k).entries;
    doc.metadata["w"] = w.to_string();
    doc.metadata["reference"] = "recurrence";

    json methods = json::object(), diffs = json::array();
    for (const std::string method : {"recurrence", "jacobi", "explicit", "determinant", "symbolic"}) {
        std::vector<Rational> values;
        try {
            if (method == "explicit" && w.is_integer() && w.sign() > 0 && k >= integer_w(w))
                values = coefficients_by(method, w, integer_w(w) - 1);
            else
                values = coefficients_by(method, w, k);
        } catch (const DomainError& e) {
            methods[method] = {{"skipped", e.what()}};
            continue;
        }
        methods[method] = rational_list(values);
        for (std::size_t j = 0; j < values.size(); ++j)
            if (values[j] != doc.coefficients[j])
                diffs.push_back({{"method", method},
                                 {"k", std::to_string(j)},
                                 {"value", values[j].to_string()},
                                 {"reference", doc.coefficients[j].to_string()}});
    }
    const bool agree = diffs.empty();
    doc.metadata["methods"] = std::move(methods);
    doc.metadata["diffs"] = std::move(diffs);
    doc.metadata["agree"] = agree;
    return {to_json(doc), agree ? 0 : 3};
}

CommandOutput run_decompose(long r, long s, long lo, const std::vector<Rational>& values,
                            std::optional<Rational> anchor)
{
    if (values.empty())
        throw std::invalid_argument("no values given");
    const TabulatedFunction f(lo, values);
    const Decomposition d = decompose(f, r, s, anchor);
    OutputDocument doc;
    doc.command = join({"decompose", "--r", std::to_string(r), "--s", std::to_string(s), "--lo",
                        std::to_string(lo)});
    doc.kind = "decomposition";
    doc.variable = "x";
    doc.coefficients = values;
    doc.metadata["r"] = std::to_string(r);
    doc.metadata["s"] = std::to_string(s);
    doc.metadata["lo"] = std::to_string(lo);
    doc.metadata["g"] = rational_list(d.g.values());
    doc.metadata["h"] = rational_list(d.h.values());
    doc.metadata["unique"] = d.unique;
    if (anchor)
        doc.metadata["anchor"] = anchor->to_string();
    return {to_json(doc), 0};
}

CommandOutput run_asymptotic(const Rational& alpha, unsigned terms, std::optional<TelescopeArgs> check)
{
    const AsymptoticSeries series = build_series(alpha, terms);
    OutputDocument doc;
    doc.command = join({"asymptotic", "--alpha", alpha.to_string(), "--terms", std::to_string(terms)});
    doc.kind = "series";
    doc.variable = "u";
    json exponents = json::array();
    for (const auto& t : series.terms) {
        doc.coefficients.push_back(t.coefficient);
        exponents.push_back(t.exponent.to_string());
    }
    doc.metadata["alpha"] = alpha.to_string();
    doc.metadata["w"] = series.w.to_string();
    doc.metadata["u"] = "n^2 + n";
    doc.metadata["exponents"] = std::move(exponents);
    doc.metadata["exact"] = series.exact;
    doc.metadata["constant"] = series.constant_tag;

    int status = 0;
    if (check) {
        doc.command += " --check " + std::to_string(check->n1) + " " + std::to_string(check->n2);
        const TelescopeReport t = telescope_check(alpha, terms, check->n1, check->n2, check->bits);
        doc.metadata["telescope"] = {
            {"n1", std::to_string(t.n1)},
            {"n2", std::to_string(t.n2)},
            {"bits", std::to_string(t.bits)},
            {"exact", t.exact},
            {"series_difference", t.series_difference},
            {"direct_sum", t.direct_sum},
            {"error", t.error},
            {"omitted_term", t.omitted_term},
            {"within_bound", t.within_bound},
            {"euler_maclaurin_error", t.euler_maclaurin_error},
        };
        status = t.within_bound ? 0 : 3;
    }
    return {to_json(doc), status};
}

CommandOutput run_riddle(const Rational& c_scale, bool alt_x5)
{
    const RiddleReport r = solve_riddle(c_scale, alt_x5);
    OutputDocument doc;
    doc.command = "riddle --c-scale " + c_scale.to_string() + (alt_x5 ? " --alt-x5" : "");
    doc.kind = "riddle";
    doc.variable = "x";
    doc.coefficients.assign(r.x.begin(), r.x.end());

    json letters = json::array(), integral = json::array();
    for (std::size_t i = 0; i < 5; ++i) {
        letters.push_back(r.letters[i] ? json(std::string(1, *r.letters[i])) : json(nullptr));
        integral.push_back(r.x[i].is_integer());
    }
    doc.metadata["c_scale"] = c_scale.to_string();
    doc.metadata["letters"] = std::move(letters);
    doc.metadata["integral"] = std::move(integral);
    doc.metadata["decoded"] = r.decoded;
    doc.metadata["name"] = r.name;
    doc.metadata["fifth_letter_inferred"] = r.fifth_letter_inferred;
    doc.metadata["x5_flag"] = r.letters[4] ? "decodes" : "not an integer in 1..23";
    if (r.x5_alternate)
        doc.metadata["x5_alternate"] = r.x5_alternate->to_string();
    doc.metadata["alphabet"] = "ABCDEFGHIKLMNOPQRSTUXYZ";
    doc.metadata["constants"] = {
        {"a_10", r.a.numerators.at(10).get_str()}, {"a_11", r.a.numerators.at(11).get_str()},
        {"a_12", r.a.numerators.at(12).get_str()}, {"a_13", r.a.numerators.at(13).get_str()},
        {"a_14", r.a.numerators.at(14).get_str()}, {"b_5", r.b.values.at(5).get_str()},
        {"b_9", r.b.values.at(9).get_str()},       {"c_1", r.c.values.at(1).get_str()},
        {"c_3", r.c.values.at(3).get_str()},       {"c_7", r.c.values.at(7).get_str()},
        {"d_11", r.d.values.at(11).get_str()},     {"e_11", r.e.values.at(11).get_str()},
        {"A_26", r.A.numerators.at(26).get_str()}, {"D", r.A.denominator.get_str()},
    };
    doc.metadata["a"] = factor_json(r.a);
    doc.metadata["A"] = factor_json(r.A);
    doc.metadata["b"] = scaled_json(r.b);
    doc.metadata["c"] = scaled_json(r.c);
    doc.metadata["d"] = scaled_json(r.d);
    doc.metadata["e"] = scaled_json(r.e);
    return {to_json(doc), 0};
}

CommandOutput run_verify(const std::string& suite)
{
    const Suite s = parse_suite(suite);
    const auto results = run_suite(s);
    OutputDocument doc;
    doc.command = "verify --suite " + suite;
    doc.kind = "verify";
    doc.variable = "criterion";
    json list = json::array();
    bool all = true;
    for (const auto& r : results) {
        json item = {{"criterion", std::to_string(r.criterion)}, {"title", r.title}, {"pass", r.pass}};
        if (!r.detail.empty())
            item["detail"] = r.detail;
        if (!r.note.empty())
            item["note"] = r.note;
        list.push_back(std::move(item));
        all = all && r.pass;
    }
    doc.metadata["suite"] = suite;
    doc.metadata["results"] = std::move(list);
    doc.metadata["pass"] = all;
    return {to_json(doc), all ? 0 : 3};
}

std::vector<Rational> read_values(const std::string& text)
{
    std::istringstream in(text);
    std::vector<Rational> out;
    std::string token;
    while (in >> token)
        out.push_back(Rational::parse(token));
    return out;
}

std::string render_pretty(const json& doc)
{
    std::ostringstream os;
    os << doc.value("command", "") << '\n';
    const std::string kind = doc.value("kind", "");
    const json& meta = doc.contains("metadata") ? doc.at("metadata") : json::object();

    if (kind == "verify") {
        for (const auto& r : meta.at("results")) {
            os << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << r.at("criterion").get<std::string>()
               << "  " << r.at("title").get<std::string>();
            if (r.contains("detail"))
                os << "  -- " << r.at("detail").get<std::string>();
            os << '\n';
        }
        return os.str();
    }

    const std::string variable = doc.value("variable", "");
    os << "denominator " << doc.value("denominator", "1") << ", coefficients by " << variable << ":\n";
    const json& cs = doc.at("coefficients");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::string label = std::to_string(i);
        if (kind == "series")
            label = "u^(" + meta.at("exponents").at(i).get<std::string>() + ")";
        else if (kind == "riddle")
            label = "x_" + std::to_string(i + 1);
        else if (variable == "C(n+k-1+r,2k-1+r)" || variable == "T_k" || variable == "C(n+1,k+1)")
            label = "k=" + std::to_string(i + 1);
        os << "  " << label << "\t" << cs[i].get<std::string>() << '\n';
    }
    render_value(os, meta, 0);
    return os.str();
}

} // namespace faulhaber::cli
