#include <doctest.h>

#include <algorithm>

#include "faulhaber/centralfact.hpp"
#include "faulhaber/powersum.hpp"
#include "oracles.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

template <typename T>
std::vector<T> reversed(std::vector<T> v)
{
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<Integer> ints(std::initializer_list<const char*> xs)
{
    std::vector<Integer> out;
    for (const char* x : xs)
        out.emplace_back(x);
    return out;
}

std::vector<Rational> rats(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("central factorial numbers")
{
    CHECK(central_factorial(1, 1) == 1);
    CHECK(central_factorial(3, 2) == 5);
    CHECK(central_factorial(4, 3) == 14);
    CHECK(central_factorial(4, 2) == 21);
    for (unsigned m = 1; m <= 10; ++m) {
        CHECK(central_factorial(m, m) == 1);
        CHECK(central_factorial(m, 1) == 1);
    }
    CHECK_THROWS_AS(central_factorial(3, 0), DomainError);
    CHECK_THROWS_AS(central_factorial(3, 4), DomainError);
}

TEST_CASE("T and U bases")
{
    CHECK(basis_T(0) == Polynomial(Var::n, {q(1), q(2)}));
    CHECK(basis_T(1) == Polynomial(Var::n, {q(0), q(1, 6), q(1, 2), q(1, 3)}));
    CHECK(basis_U(1) == Polynomial::monomial(Var::n, q(1), 2));
    CHECK_THROWS_AS(basis_U(0), DomainError);
    const Polynomial one = Polynomial::constant(Var::n, q(1));
    for (unsigned k = 0; k <= 8; ++k) {
        CHECK(basis_T(k) == basis_T_product(k));
        if (k >= 1) {
            CHECK(basis_U(k) == basis_U_sum(k));
            CHECK(nabla(basis_T(k)) == basis_U(k));
            CHECK(nabla(basis_U(k)) == shift(basis_T(k - 1), q(-1)));
        }
    }
}

TEST_CASE("odd power sums in the central binomial basis")
{
    CHECK(odd_powersum_cf(2) == std::vector<Integer>{1, 6});
    CHECK(reversed(odd_powersum_cf(7)) ==
          ints({"6227020800", "3632428800", "726485760", "57657600", "1561560", "8190", "1"}));
    for (unsigned m = 1; m <= 8; ++m) {
        const Polynomial p = odd_powersum_cf_polynomial(m);
        CHECK(p == power_sum(2 * m - 1, 1));
        CHECK(p(q(2)) == q(1) + pow(q(2), 2 * m - 1));
    }
}

TEST_CASE("even power sums in the T basis")
{
    CHECK(even_powersum_cf(1) == rats({1}));
    CHECK(reversed(even_powersum_cf(2)) == rats({12, 1}));
    CHECK(reversed(even_powersum_cf(6)) == rats({239500800, 99792000, 12640320, 506880, 4092, 1}));
    for (unsigned m = 1; m <= 8; ++m) {
        const auto c = even_powersum_cf(m);
        CHECK(even_powersum_cf_polynomial(c) == power_sum(2 * m, 1));
        for (unsigned k = 1; k <= m; ++k)
            CHECK(c[k - 1] == Rational(Integer(Integer(k) * factorial(2 * k - 1) * central_factorial(m, k))));
    }
}

TEST_CASE("even/odd central duality")
{
    CHECK(even_odd_cf_dual(std::vector<Rational>{}).empty());
    CHECK(even_odd_cf_dual(rats({0, 0, 0})) == rats({0, 0, 0}));
    for (unsigned m = 1; m <= 7; ++m) {
        // a_k read directly off sum n^(2m) / (2n + 1).
        const Polynomial quotient = exact_div(power_sum(2 * m, 1), Polynomial(Var::n, {q(1), q(2)}));
        std::vector<Polynomial> basis;
        for (unsigned k = 1; k <= m; ++k)
            basis.push_back(central_binomial(k));
        const auto a = expand_in_basis(quotient, basis);
        std::vector<Rational> odd;
        for (const auto& c : odd_powersum_cf(m))
            odd.emplace_back(c);
        CHECK(even_odd_cf_dual(a) == odd);
        CHECK(odd_even_cf_dual(odd) == a);
    }
}

TEST_CASE("repeated sums by index shift")
{
    for (unsigned r = 1; r <= 6; ++r) {
        CHECK(odd_powersum_cf_polynomial(1, r) == power_sum(1, r));
        CHECK(odd_powersum_cf_polynomial(2, r) == central_binomial(2, r - 1) * q(6) + central_binomial(1, r - 1));
        CHECK(odd_powersum_cf_polynomial(2, r) == power_sum(3, r));
        for (unsigned m = 3; m <= 5; ++m)
            CHECK(odd_powersum_cf_polynomial(m, r) == power_sum(2 * m - 1, r));
    }
}

TEST_CASE("stirling")
{
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(5, 2) == 15);
    const StirlingExpansion e7 = stirling_expansion(7);
    CHECK(reversed(e7.rising) == ints({"5040", "15120", "16800", "8400", "1806", "126", "1"}));
    CHECK(reversed(e7.alternating) == ints({"5040", "-15120", "16800", "-8400", "1806", "-126", "1"}));
    const StirlingExpansion e1 = stirling_expansion(1);
    CHECK(e1.rising == ints({"1"}));
    for (unsigned m = 1; m <= 9; ++m) {
        const StirlingExpansion e = stirling_expansion(m);
        CHECK(stirling_rising_polynomial(e) == power_sum(m, 1));
        CHECK(stirling_alternating_polynomial(e) == power_sum(m, 1));
    }
}

TEST_CASE("central expansions are shorter than the Stirling ones")
{
    CHECK(odd_powersum_cf(7).size() == 7);
    CHECK(stirling_expansion(13).rising.size() == 13);
}

TEST_CASE("generating function")
{
    CHECK(gf_central_coefficient(1) == Polynomial::monomial(Var::x, q(1), 2));
    CHECK(gf_central_coefficient(3) == Polynomial(Var::x, {q(0), q(0), q(1), q(0), q(5), q(0), q(1)}));
    CHECK(gf_check_central(8));
}
