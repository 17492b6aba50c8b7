#pragma once

// Exact integers and rationals.
//
// Integer is GMP's mpz_class. Rational wraps mpq_class and is always kept in
// canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1. Every
// computation in the library is done with these two types.

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace faulhaber {

using Integer = mpz_class;

/// Base class for every domain error raised by the library (CLI exit code 2).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    Rational(T v) : value_(static_cast<unsigned long>(v)) {}

    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    /// "p/q", or "p" when q = 1; sign carried on the numerator.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// r^e for integer e (negative e requires r != 0).
Rational pow(const Rational& r, long e);

/// The integer part of r rounded toward negative infinity.
Integer floor(const Rational& r);

Integer factorial(unsigned long k);

/// C(n, k) for any integer n (upper negation applies for n < 0).
Integer binomial(const Integer& n, unsigned long k);

/// x(x-1)...(x-k+1)/k!; 1 when k = 0.
Rational rational_binomial(const Rational& x, unsigned long k);

Integer parse_integer(std::string_view text);

} // namespace faulhaber
