#include <doctest.h>

#include <random>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/faulcoeff.hpp"
#include "faulhaber/powersum.hpp"
#include "linalg.hpp"
#include "oracles.hpp"

using namespace faulhaber;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

Polynomial product_w(const std::vector<Polynomial>& factors, const Rational& scale)
{
    Polynomial p = Polynomial::constant(Var::w, scale);
    for (const auto& f : factors)
        p *= f;
    return p;
}

Polynomial lin(long c) { return Polynomial::linear(Var::w, q(c)); }

/// A_k^(m) read off the power sum itself: sum n^(2m-1) = (1/2m) sum_k A_k u^(m-k).
std::vector<Rational> from_power_sum(unsigned m)
{
    const Polynomial in_N = to_faulhaber_form(2 * m - 1, 1).polynomial_in_N();
    std::vector<Rational> a(m + 1);
    for (unsigned k = 0; k < m; ++k)
        a[k] = in_N.coeff(m - k) * q(2 * m) / pow(q(2), static_cast<long>(m - k));
    a[m] = bernoulli_number(2 * m);
    return a;
}

} // namespace

TEST_CASE("recurrence examples")
{
    const auto a4 = a_by_recurrence(q(4), 4).entries;
    CHECK(a4[0] == q(1));
    CHECK(a4[1] == q(-4, 3));
    CHECK(a4[2] == q(2, 3));
    CHECK(a4[3] == q(0));
    CHECK(a4[4] == bernoulli_number(8));
    const auto a3 = a_by_recurrence(q(3), 6).entries;
    CHECK(a3[1] == q(-1, 2));
    CHECK(a3[4] == q(0));
    CHECK(a3[6] == q(0));
    const auto cat = a_by_recurrence(q(3, 2), 8).entries;
    for (unsigned k = 0; k <= 8; ++k)
        CHECK(cat[k] == rational_binomial(q(1, 2), k) / pow(q(4), k));
    CHECK_THROWS_AS(a_by_recurrence(q(2), 3, SpecialValues::reject), PivotZeroError);
}

TEST_CASE("recurrence agrees with the power sums")
{
    for (unsigned m = 1; m <= 10; ++m)
        CHECK(a_by_recurrence(q(m), m).entries == from_power_sum(m));
}

TEST_CASE("symbolic coefficients")
{
    CHECK(a_symbolic(0) == Polynomial::constant(Var::w, q(1)));
    CHECK(a_symbolic(1) == product_w({lin(0), lin(-2)}, q(-1, 6)));
    CHECK(a_symbolic(2) == product_w({lin(0), lin(-1), lin(-3), Polynomial(Var::w, {q(-8), q(7)})}, q(1, 360)));
    for (unsigned k = 0; k <= 6; ++k)
        CHECK(a_symbolic(k).degree() == static_cast<long>(2 * k));
}

TEST_CASE("symbolic evaluation agrees with the recurrence")
{
    std::mt19937_64 rng(99);
    const auto table = a_symbolic_table(5);
    for (int trial = 0; trial < 20; ++trial) {
        Rational w = oracle::random_rational(rng, 30);
        if (w.is_integer())
            w += q(1, 7);
        const auto a = a_by_recurrence(w, 5).entries;
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(table[k](w) == a[k]);
    }
}

TEST_CASE("symbolic structure")
{
    for (unsigned k = 1; k <= 6; ++k) {
        Polynomial falling = Polynomial::constant(Var::w, q(1));
        for (unsigned i = 0; i < k; ++i)
            falling *= lin(-static_cast<long>(i));
        const Polynomial quotient = exact_div(a_symbolic(k), falling);
        CHECK(quotient.degree() == static_cast<long>(k));
        CHECK(quotient.leading() == (q(2) - pow(q(2), 2 * k)) * bernoulli_number(2 * k) /
                                        Rational(factorial(2 * k)));
        CHECK(quotient(q(k + 1)).is_zero());
    }
}

TEST_CASE("Jacobi recurrence")
{
    for (unsigned w = 0; w <= 12; ++w)
        CHECK(a_by_jacobi(q(w), 12).entries == a_by_recurrence(q(w), 12).entries);
    for (const Rational& w : {q(3, 2), q(7, 3), q(11, 2), q(1, 5)})
        CHECK(a_by_jacobi(w, 6).entries == a_by_recurrence(w, 6).entries);
    CHECK_THROWS_AS(a_by_jacobi(q(-1, 2), 3), DomainError);
}

TEST_CASE("Jacobi recurrence as a polynomial identity")
{
    const auto a = a_symbolic_table(5);
    const Polynomial w = lin(0);
    for (unsigned k = 1; k <= 5; ++k) {
        const Polynomial wk = lin(-static_cast<long>(k));
        const Polynomial lhs = wk * q(2) * (wk * q(2) - Polynomial::constant(Var::w, q(1))) * a[k] +
                               (wk + Polynomial::constant(Var::w, q(1))) * wk * a[k - 1];
        const Polynomial rhs = w * q(2) * (w * q(2) - Polynomial::constant(Var::w, q(1))) *
                               compose(a[k], lin(-1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("explicit formula")
{
    for (unsigned m = 1; m <= 10; ++m) {
        const auto a = a_by_recurrence(q(m), m).entries;
        for (unsigned k = 0; k < m; ++k)
            CHECK(a_explicit(m, k) == a[k]);
        if (m >= 2) {
            CHECK(a_explicit(m, m - 1) == q(0));
            CHECK(a_explicit(m, m - 2) == Rational(binomial(Integer(2 * m), 2)) * bernoulli_number(2 * m - 2));
        }
        if (m >= 3)
            CHECK(a_explicit(m, m - 3) == q(-2) * a_explicit(m, m - 2));
        if (m >= 4)
            CHECK(a_explicit(m, m - 4) ==
                  Rational(binomial(Integer(2 * m), 4)) * bernoulli_number(2 * m - 4) +
                      q(5) * Rational(binomial(Integer(2 * m), 2)) * bernoulli_number(2 * m - 2));
    }
    CHECK_THROWS_AS(a_explicit(3, 3), DomainError);
}

TEST_CASE("determinant")
{
    CHECK(faulhaber_determinant(q(7, 2), 0) == q(1));
    const Rational w = q(13, 5);
    CHECK(faulhaber_determinant(w, 1) == rational_binomial(w, 3));
    CHECK(*a_by_determinant(w, 1).A == a_symbolic(1)(w));
    CHECK(*a_by_determinant(q(5), 2).A == a_by_recurrence(q(5), 2).entries[2]);
    CHECK_FALSE(a_by_determinant(q(2), 3).A.has_value());
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(*a_by_determinant(w, k).A == a_by_recurrence(w, k).entries[k]);
}

TEST_CASE("determinant recurrences")
{
    const auto T1 = [](const Rational& x) { return x * (x + q(1)) * (q(2) * x + q(1)) / q(6); };
    const auto U2 = [](const Rational& x) { return x * x * (x * x - q(1)) / q(12); };
    for (unsigned w = 3; w <= 7; ++w)
        for (unsigned k = 2; k < w; ++k) {
            const Rational W(w), K(k);
            const Rational Dk = faulhaber_determinant(W, k);
            const Rational Dk1 = faulhaber_determinant(W, k - 1);
            const Rational Dw1 = faulhaber_determinant(W - q(1), k);
            const Rational x = W - K;
            CHECK(x * x * (x + q(1)) * (x - q(1)) * Dk1 ==
                  q(2) * x * (q(2) * x - q(1)) * (x - q(1)) * Dk -
                      q(2) * W * (q(2) * W - q(1)) * (W - q(1)) * Dw1);
            CHECK(U2(x) * Dk1 == T1(x - q(1)) * Dk - T1(W - q(1)) * Dw1);
        }
}

TEST_CASE("staircase")
{
    CHECK(staircase_count(3, 1) == 1);
    CHECK(staircase_count(4, 1) == 4);
    for (unsigned w = 2; w <= 7; ++w)
        for (unsigned k = 1; k + 1 < w + 1 && k < w; ++k)
            CHECK(Rational(staircase_count(w, k)) == faulhaber_determinant(q(w), k));
    CHECK_THROWS_AS(staircase_count(7, 4, 10), InstanceTooLarge);
    CHECK_THROWS_AS(staircase_count(3, 3), DomainError);
}

TEST_CASE("staircase at w = m + 1 gives the Bernoulli number")
{
    // A_{m-1}^(m+1) = D(m+1, m-1)/((1-w)...(m-1-w)) and 2 A_{m-1}^(m+1) = (2m+2)(2m+1) B_2m.
    for (unsigned m = 2; m <= 5; ++m) {
        const Rational w(m + 1);
        Rational prefactor(1);
        for (unsigned i = 1; i < m; ++i)
            prefactor *= Rational(i) - w;
        const Rational a = Rational(staircase_count(m + 1, m - 1)) / prefactor;
        CHECK(q(2) * a == q(2 * m + 2) * q(2 * m + 1) * bernoulli_number(2 * m));
    }
}

TEST_CASE("closed form and sign pattern")
{
    for (unsigned m = 1; m <= 10; ++m) {
        CHECK(closed_form_check(m));
        const auto a = a_by_recurrence(q(m), m).entries;
        for (unsigned k = 0; k < m; ++k)
            CHECK((k % 2 == 0 ? a[k] : -a[k]).sign() >= 0);
        // The staircase count only covers k < m; B_2m has the other sign.
        CHECK((m % 2 == 0 ? a[m] : -a[m]).sign() < 0);
    }
}

TEST_CASE("generating function")
{
    CHECK(gf_faulhaber_coefficient(1) == Polynomial(Var::u, {q(1, 6), q(1)}));
    CHECK(gf_faulhaber_coefficient(2) == Polynomial(Var::u, {bernoulli_number(4), q(0), q(1)}));
    CHECK(gf_check_faulhaber(8));
}

TEST_CASE("linear algebra helpers")
{
    detail::Matrix m{{q(0), q(2)}, {q(3), q(4)}};
    CHECK(detail::determinant(m) == q(-6));
    const auto sol = detail::solve({{q(1), q(1)}, {q(2), q(2)}}, {q(3), q(6)});
    REQUIRE(sol.has_value());
    CHECK(sol->free_columns == std::vector<std::size_t>{1});
    CHECK_FALSE(detail::solve({{q(1), q(1)}, {q(2), q(2)}}, {q(3), q(5)}).has_value());
}
