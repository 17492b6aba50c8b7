#include <doctest.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/powersum.hpp"
#include "oracles.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

Polynomial in_N(std::vector<long> nums, long den)
{
    std::vector<Rational> cs;
    for (long c : nums)
        cs.push_back(q(c, den));
    return Polynomial(Var::N, cs);
}

bool reflective(const Polynomial& f, long r, int sign)
{
    const Polynomial mirror = compose(f, Polynomial(f.var(), {q(-r), q(-1)}));
    return f - mirror * q(sign) == Polynomial(f.var());
}

} // namespace

TEST_CASE("power_sum basics")
{
    CHECK(power_sum(1, 1) == Polynomial(Var::n, {q(0), q(1, 2), q(1, 2)}));
    CHECK(power_sum(4, 0) == Polynomial::monomial(Var::n, q(1), 4));
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned r = 0; r <= 6; ++r) {
            const Polynomial p = power_sum(m, r);
            CHECK(p(q(1)) == q(1));
            CHECK(p.degree() == static_cast<long>(m + r));
        }
}

TEST_CASE("power_sum against nested sums")
{
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned r = 1; r <= 4; ++r) {
            const Polynomial p = power_sum(m, r);
            for (unsigned n = 0; n <= 15; ++n)
                CHECK(p(q(n)) == Rational(oracle::nested_sum(m, r, n)));
        }
}

TEST_CASE("vanishing window")
{
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned r = 1; r <= 5; ++r)
            for (long x = -static_cast<long>(r); x <= 0; ++x)
                CHECK(power_sum(m, r)(q(x)).is_zero());
}

TEST_CASE("reflectivity of repeated sums")
{
    for (unsigned m = 1; m <= 8; ++m)
        for (unsigned r = 1; r <= 8; ++r)
            CHECK(reflective(power_sum(m, r), r, (m + r) % 2 == 0 ? 1 : -1));
}

TEST_CASE("Jacobi derivative identity")
{
    // At m = 1 the identity needs the sum of zeroth powers to count 0^0.
    CHECK(derivative(power_sum(1, 1)) == Polynomial::linear(Var::n, q(1)) + Polynomial::constant(Var::n, bernoulli_number(1)));
    for (unsigned m = 2; m <= 12; ++m)
        CHECK(derivative(power_sum(m, 1)) ==
              power_sum(m - 1, 1) * q(m) + Polynomial::constant(Var::n, bernoulli_number(m)));
}

TEST_CASE("Faulhaber form examples")
{
    const FaulhaberForm f9 = to_faulhaber_form(9, 1);
    CHECK(f9.factor == FactorKind::first_powers);
    CHECK(f9.polynomial_in_N() == in_N({0, 0, -3, 12, -20, 16}, 5));

    const FaulhaberForm f42 = to_faulhaber_form(4, 2);
    CHECK(f42.factor == FactorKind::squares);
    CHECK(f42.g == in_N({-1, 4}, 5));

    const FaulhaberForm f52 = to_faulhaber_form(5, 2);
    CHECK(f52.factor == FactorKind::first_powers);
    CHECK(f52.g == in_N({-1, -2, 8}, 14));

    CHECK_THROWS_AS(to_faulhaber_form(3, 0), DomainError);
    CHECK_THROWS_AS(f42.polynomial_in_N(), DomainError);
}

TEST_CASE("Faulhaber form round trip")
{
    for (unsigned m = 1; m <= 10; ++m)
        for (unsigned r = 1; r <= 6; ++r) {
            const FaulhaberForm f = to_faulhaber_form(m, r);
            CHECK(f.expand() == power_sum(m, r));
            CHECK((f.factor == FactorKind::first_powers) == (m % 2 == 1));
        }
}

TEST_CASE("factor polynomials")
{
    for (unsigned r = 1; r <= 6; ++r) {
        const FaulhaberForm odd = to_faulhaber_form(1, r);
        CHECK(odd.factor_polynomial() == power_sum(1, r));
        const FaulhaberForm even = to_faulhaber_form(2, r);
        CHECK(even.factor_polynomial() == power_sum(2, r));
    }
}

TEST_CASE("leading coefficient of odd sums")
{
    for (unsigned m = 1; m <= 9; ++m)
        CHECK(to_faulhaber_form(2 * m - 1, 1).polynomial_in_N().leading() ==
              pow(q(2), static_cast<long>(m) - 1) / q(m));
}

TEST_CASE("odd reduction")
{
    const OddReduction r7 = derive_odd_reduction(7);
    CHECK(r7.leading == q(64, 7));
    REQUIRE(r7.s_terms.size() == 3);
    CHECK(r7.s_terms[0] == std::pair<unsigned, Rational>{11, q(70)});
    CHECK(r7.s_terms[1] == std::pair<unsigned, Rational>{9, q(42)});
    CHECK(r7.s_terms[2] == std::pair<unsigned, Rational>{7, q(2)});
    CHECK(r7.reduction[0].second == q(5));
    CHECK(r7.reduction[1].second == q(3));
    CHECK(r7.reduction[2].second == q(1, 7));

    const OddReduction r2 = derive_odd_reduction(2);
    CHECK(r2.leading == q(1));
    CHECK(r2.s_terms.empty());

    CHECK_THROWS_AS(derive_odd_reduction(1), DomainError);
}

TEST_CASE("recursive reduction reproduces the Faulhaber form")
{
    for (unsigned m = 1; m <= 9; ++m)
        CHECK(odd_sum_by_reduction(m) == to_faulhaber_form(2 * m - 1, 1).polynomial_in_N());
}

TEST_CASE("even/odd duality")
{
    const Polynomial s7 = Polynomial(Var::N, {q(0), q(0), q(1, 3), q(-4, 3), q(2)});
    const auto a = even_from_odd(s7);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == q(2, 3));
    CHECK(a[1] == q(-4));
    CHECK(a[2] == q(8));
    const Polynomial s6 = even_sum_from_coefficients(a);
    CHECK(s6(q(1)) == q(1));
    CHECK(s6(q(2)) == q(65));
    CHECK(s6 == power_sum(6, 1));

    const auto a1 = even_from_odd(Polynomial::monomial(Var::N, q(1), 2));
    REQUIRE(a1.size() == 1);
    CHECK(a1[0] == q(2));
    CHECK(even_sum_from_coefficients(a1) == power_sum(2, 1));

    CHECK_THROWS_AS(even_from_odd(Polynomial(Var::N, {q(1), q(0), q(1)})), DomainError);
    CHECK_THROWS_AS(even_from_odd(Polynomial(Var::N, {q(0), q(1), q(1)})), DomainError);
    CHECK_THROWS_AS(even_from_odd(Polynomial::monomial(Var::n, q(1), 2)), VariableMismatch);
}

TEST_CASE("duality round trips")
{
    for (unsigned m = 1; m <= 8; ++m) {
        const Polynomial odd = to_faulhaber_form(2 * m + 1, 1).polynomial_in_N();
        const auto a = even_from_odd(odd);
        CHECK(odd_from_even(a) == odd);
        CHECK(a == even_sum_coefficients(m));
        CHECK(even_sum_from_coefficients(a) == power_sum(2 * m, 1));
    }
}
