#include <doctest.h>

#include "commands.hpp"
#include "document.hpp"
#include "faulhaber/asymptotic.hpp"
#include "faulhaber/faulcoeff.hpp"
#include "faulhaber/powersum.hpp"
#include "oracles.hpp"

using namespace faulhaber;
using namespace faulhaber::cli;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

// Through text, as a consumer of the CLI would see it.
OutputDocument reparse(const json& j) { return from_json(json::parse(j.dump())); }

} // namespace

TEST_CASE("powersum documents round-trip in every basis")
{
    struct Case {
        unsigned m, r;
        const char* basis;
    };
    std::vector<Case> cases;
    for (unsigned m = 1; m <= 9; ++m)
        for (unsigned r = 1; r <= 3; ++r) {
            cases.push_back({m, r, "n"});
            cases.push_back({m, r, "faulhaber"});
            if (m % 2 == 1 || r == 1)
                cases.push_back({m, r, "cfactorial"});
            if (r == 1)
                cases.push_back({m, r, "stirling"});
        }
    cases.push_back({4, 0, "n"});
    for (const auto& c : cases) {
        CAPTURE(c.m);
        CAPTURE(c.r);
        CAPTURE(c.basis);
        const OutputDocument doc = reparse(run_powersum(c.m, c.r, c.basis).document);
        const Polynomial p = rebuild_powersum(doc);
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(p(Rational(n)) == Rational(oracle::nested_sum(c.m, c.r, n)));
    }
}

TEST_CASE("powersum faulhaber document for sum n^9")
{
    const json j = run_powersum(9, 1, "faulhaber").document;
    CHECK(j["denominator"] == "5");
    CHECK(j["numerators"] == json{"0", "-3", "12", "-20", "16"});
    CHECK(j["variable"] == "N");
    CHECK(j["metadata"]["factor"] == "sum^r n^1");
}

TEST_CASE("unsupported bases are domain errors")
{
    CHECK_THROWS_AS(run_powersum(4, 2, "cfactorial"), DomainError);
    CHECK_THROWS_AS(run_powersum(4, 2, "stirling"), DomainError);
    CHECK_THROWS_AS(run_powersum(4, 1, "other"), std::invalid_argument);
}

TEST_CASE("coefficient documents")
{
    const Rational w = q(3, 2);
    const OutputDocument rec = reparse(run_coeffs(w, 3, "recurrence").document);
    const OutputDocument exp = reparse(run_coeffs(w, 3, "symbolic").document);
    CHECK(rec.coefficients == a_by_recurrence(w, 3).entries);
    CHECK(exp.coefficients == rec.coefficients);
    const CommandOutput cross = run_coeffs_cross_check(w, 3);
    CHECK(cross.status == 0);
    CHECK(cross.document["metadata"]["agree"] == true);
    CHECK(cross.document["metadata"]["methods"]["explicit"].contains("skipped"));
    const CommandOutput integral = run_coeffs_cross_check(q(6), 8);
    CHECK(integral.status == 0);
    CHECK(reparse(run_coeffs(q(6), 4, "explicit").document).coefficients ==
          a_by_recurrence(q(6), 4).entries);
    CHECK_THROWS_AS(run_coeffs(q(3, 2), 2, "explicit"), DomainError);
    CHECK_THROWS_AS(run_coeffs(q(2), 3, "determinant"), DomainError);
}

TEST_CASE("series documents")
{
    const json j = run_asymptotic(q(-2), 4, std::nullopt).document;
    const OutputDocument doc = reparse(j);
    const AsymptoticSeries s = build_series(q(-2), 4);
    REQUIRE(doc.coefficients.size() == s.terms.size());
    const auto exponents = parse_rational_list(doc.metadata["exponents"]);
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        CHECK(doc.coefficients[i] == s.terms[i].coefficient);
        CHECK(exponents[i] == s.terms[i].exponent);
    }
    const CommandOutput checked = run_asymptotic(q(-1, 3), 4, TelescopeArgs{50, 100, 200});
    CHECK(checked.status == 0);
    CHECK(checked.document["metadata"]["telescope"]["within_bound"] == true);
}

TEST_CASE("decomposition documents")
{
    const std::vector<Rational> values = read_values("9 4 1 0 1 4 9");
    const OutputDocument doc = reparse(run_decompose(0, 0, -3, values, std::nullopt).document);
    const auto g = parse_rational_list(doc.metadata["g"]);
    const auto h = parse_rational_list(doc.metadata["h"]);
    REQUIRE(g.size() == values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        CHECK(g[i] + h[i] == values[i]);
    CHECK(h == std::vector<Rational>(values.size()));
}

TEST_CASE("riddle document")
{
    const json j = run_riddle(q(1, 4), true).document;
    CHECK(j["metadata"]["decoded"] == "IESU?");
    CHECK(j["metadata"]["name"] == "IESUS");
    CHECK(j["metadata"]["letters"][4].is_null());
    CHECK(j["metadata"].contains("x5_alternate"));
    CHECK(reparse(j).coefficients[1] == q(5));
}

TEST_CASE("malformed documents are rejected")
{
    json j = run_powersum(3, 1, "n").document;
    json bad = j;
    bad["numerators"][1] = "7";
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("kind");
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    bad = j;
    bad["coefficients"][0] = 3;
    CHECK_THROWS_AS(from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(read_values("1 2/0"), DomainError);
}
