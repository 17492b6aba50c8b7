#include <doctest.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/powersum.hpp"
#include "oracles.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

} // namespace

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_number(0) == q(1));
    CHECK(bernoulli_number(1) == q(-1, 2));
    CHECK(bernoulli_number(12) == q(-691, 2730));
    for (unsigned k = 1; k < 20; ++k)
        CHECK(bernoulli_number(2 * k + 1).is_zero());
}

TEST_CASE("bernoulli numbers agree with an independent algorithm")
{
    const auto ref = oracle::bernoulli(40);
    const auto got = bernoulli_cache().prefix(40);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(got[i] == ref[i]);
}

TEST_CASE("B_1 reproduces the sum of first powers")
{
    // (1/2)(B_0 n^2 - 2 B_1 n) = (n^2 + n)/2
    const Polynomial p(Var::n, {q(0), -bernoulli_number(1), q(1, 2)});
    CHECK(p == power_sum(1, 1));
}

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_polynomial(0) == Polynomial::constant(Var::x, q(1)));
    CHECK(bernoulli_polynomial(2) == Polynomial(Var::x, {q(1, 6), q(-1), q(1)}));
    for (unsigned m = 1; m <= 12; ++m) {
        const Polynomial b = bernoulli_polynomial(m);
        CHECK(shift(b, q(1)) - b == Polynomial::monomial(Var::x, q(m), m - 1));
        CHECK(derivative(b) == bernoulli_polynomial(m - 1) * q(m));
        const Polynomial reflected = compose(b, Polynomial(Var::x, {q(0), q(-1)}));
        CHECK(shift(b, q(1)) == (m % 2 == 0 ? reflected : -reflected));
    }
}

TEST_CASE("power sums from bernoulli polynomials")
{
    for (unsigned m = 1; m <= 12; ++m) {
        const Polynomial b = bernoulli_polynomial(m + 1, Var::n);
        const Polynomial s = (shift(b, q(1)) - Polynomial::constant(Var::n, b(q(0)))) / q(m + 1);
        CHECK(s == power_sum(m, 1));
    }
}

TEST_CASE("generalized bernoulli")
{
    const LadderSeries b = generalized_bernoulli(q(2, 3), 2);
    CHECK(b.base() == q(2, 3));
    CHECK(b.coeff(0) == q(1));
    CHECK(b.coeff(1) == q(0));
    CHECK(b.coeff(2) == q(-1, 3));
    CHECK(b.coeff(3) == q(0));
    CHECK(b.coeff(4) == q(-1, 54));
    CHECK(b.exponent(4) == q(-4, 3));
}

TEST_CASE("generalized bernoulli at integer index is the polynomial")
{
    for (unsigned m = 0; m <= 10; ++m) {
        const LadderSeries s = generalized_bernoulli(q(m), m + 3);
        const Polynomial b = bernoulli_polynomial(m);
        for (unsigned k = 0; k <= m + 3; ++k) {
            const Rational expected = k <= m ? b.coeff(m - k) : q(0);
            CHECK(s.coeff(2 * k) == expected);
        }
    }
}

TEST_CASE("generalized bernoulli Euler summation display")
{
    // B_{2/3}(n+1) re-expanded in n: the terms n^(2/3), (2/3) n^(-1/3), -(1/9) n^(-4/3)
    // come from x^(2/3) after the successor shift, plus -(1/3) n^(-1/3) from B_1.
    const LadderSeries s = substitute_successor(generalized_bernoulli(q(2, 3), 2));
    CHECK(s.coeff(0) == q(1));
    CHECK(s.coeff(2) == q(2, 3) - q(1, 3));
    CHECK(s.coeff(0) * q(3, 2) == q(3, 2));
    CHECK(s.coeff(2) * q(3, 2) == q(1, 2));
    CHECK(s.coeff(4) * q(3, 2) == q(-1, 36));
}
