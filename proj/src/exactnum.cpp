#include "faulhaber/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace faulhaber {

namespace {

bool valid_integer_text(std::string_view t)
{
    if (!t.empty() && (t.front() == '-' || t.front() == '+'))
        t.remove_prefix(1);
    if (t.empty())
        return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Integer parse_integer(std::string_view text)
{
    if (!valid_integer_text(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
        throw std::invalid_argument("sign must be on the numerator: '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string Rational::to_string() const
{
    std::string s = value_.get_num().get_str();
    if (value_.get_den() != 1)
        s += "/" + value_.get_den().get_str();
    return s;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e)
{
    if (e < 0)
        return Rational(1) / pow(r, -e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

Integer floor(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

Integer factorial(unsigned long k)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

Integer binomial(const Integer& n, unsigned long k)
{
    Integer c;
    mpz_bin_ui(c.get_mpz_t(), n.get_mpz_t(), k);
    return c;
}

Rational rational_binomial(const Rational& x, unsigned long k)
{
    if (x.is_integer())
        return Rational(binomial(x.numerator(), k));
    Rational c(1);
    for (unsigned long i = 0; i < k; ++i)
        c *= (x - Rational(i)) / Rational(i + 1);
    return c;
}

} // namespace faulhaber
