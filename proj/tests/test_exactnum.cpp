#include <doctest.h>

#include <random>
#include <stdexcept>

#include "faulhaber/exactnum.hpp"

using namespace faulhaber;

TEST_CASE("canonical form")
{
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(Integer(0), Integer(-7)).to_string() == "0");
    CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("parse and print")
{
    CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("3/9").to_string() == "1/3");
    CHECK(Rational(-5).to_string() == "-5");
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("2/-3"), std::invalid_argument);
}

TEST_CASE("division by zero")
{
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("floor and pow")
{
    CHECK(floor(Rational(Integer(7), Integer(2))) == 3);
    CHECK(floor(Rational(Integer(-7), Integer(2))) == -4);
    CHECK(floor(Rational(-3)) == -3);
    CHECK(pow(Rational(Integer(2), Integer(3)), -2) == Rational(Integer(9), Integer(4)));
    CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(factorial(17) / 120 == Integer("2964061900800"));
}

TEST_CASE("rational binomial")
{
    CHECK(rational_binomial(Rational(4), 2) == Rational(6));
    CHECK(rational_binomial(Rational(Integer(1), Integer(2)), 1) == Rational(Integer(1), Integer(2)));
    // (1/2)(-1/2)/2
    CHECK(rational_binomial(Rational(Integer(1), Integer(2)), 2) == Rational(Integer(-1), Integer(8)));
    CHECK(rational_binomial(Rational(Integer(-3), Integer(7)), 0) == Rational(1));
    CHECK(rational_binomial(Rational(3), 5) == Rational(0));
    CHECK(binomial(Integer(-2), 3) == -4);
}

TEST_CASE("rational binomial agrees with integer binomial")
{
    for (long n = 0; n <= 30; ++n)
        for (unsigned long k = 0; k <= static_cast<unsigned long>(n); ++k)
            CHECK(rational_binomial(Rational(n), k) == Rational(binomial(Integer(n), k)));
}

TEST_CASE("rational binomial step identity")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x(Integer(num(rng)), Integer(den(rng)));
        for (unsigned long k = 0; k < 8; ++k)
            CHECK(rational_binomial(x, k + 1) ==
                  rational_binomial(x, k) * (x - Rational(k)) / Rational(k + 1));
    }
}

namespace {

Integer random_bits(std::mt19937_64& rng, unsigned bits)
{
    Integer v = 0;
    for (unsigned i = 0; i < bits / 64; ++i) {
        v <<= 64;
        const auto word = rng();
        v += Integer(static_cast<unsigned long>(word));
    }
    return (rng() & 1) ? Integer(-v) : v;
}

} // namespace

TEST_CASE("256-bit arithmetic stays canonical and exact")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const Integer a = random_bits(rng, 256), c = random_bits(rng, 256);
        Integer b = random_bits(rng, 256), d = random_bits(rng, 256);
        if (b == 0)
            b = 1;
        if (d == 0)
            d = 1;
        const Rational x(a, b), y(c, d);
        for (const Rational& z : {x + y, x - y, x * y}) {
            CHECK(z.denominator() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), z.numerator().get_mpz_t(), z.denominator().get_mpz_t());
            CHECK(g == 1);
        }
        // Cross-multiplied identity, independent of the library's reduction.
        const Rational s = x + y;
        CHECK(s.numerator() * b * d == (a * d + c * b) * s.denominator());
        if (!y.is_zero())
            CHECK((x / y) * y == x);
    }
}

TEST_CASE("ordering")
{
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
    CHECK(Rational(-1) < Rational(0));
    CHECK(abs(Rational(Integer(-2), Integer(5))) == Rational(Integer(2), Integer(5)));
}

TEST_CASE("parse_integer")
{
    CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
}
