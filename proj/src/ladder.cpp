#include "faulhaber/ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace faulhaber {

LadderSeries::LadderSeries(Var v, Rational base, std::vector<Rational> coeffs, std::size_t truncation)
    : var_(v), base_(std::move(base)), coeffs_(std::move(coeffs)), truncation_(truncation)
{
    coeffs_.resize(truncation_ + 1);
}

LadderSeries LadderSeries::one(Var v, std::size_t truncation)
{
    return LadderSeries(v, Rational(0), {Rational(1)}, truncation);
}

const Rational& LadderSeries::coeff(std::size_t j) const
{
    if (j > truncation_)
        throw std::out_of_range("ladder coefficient past truncation");
    return coeffs_[j];
}

LadderSeries LadderSeries::truncated(std::size_t truncation) const
{
    return LadderSeries(var_, base_, coeffs_, std::min(truncation, truncation_));
}

LadderSeries LadderSeries::operator-() const
{
    LadderSeries s = *this;
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

LadderSeries& LadderSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

namespace {

std::size_t valuation(const LadderSeries& s)
{
    for (std::size_t j = 0; j <= s.truncation(); ++j)
        if (!s.coeff(j).is_zero())
            return j;
    return s.truncation() + 1;
}

// 2 * (hi - lo) as a nonnegative index offset.
std::size_t half_steps(const Rational& hi, const Rational& lo)
{
    Rational d = (hi - lo) * Rational(2);
    if (!d.is_integer() || d.sign() < 0)
        throw DomainError("ladder bases are not aligned on the half-integer grid");
    return d.numerator().get_ui();
}

} // namespace

LadderSeries operator*(const LadderSeries& a, const LadderSeries& b)
{
    if (a.var() != b.var())
        throw VariableMismatch(a.var(), b.var());
    const std::size_t t = std::min(a.truncation() + valuation(b), b.truncation() + valuation(a));
    std::vector<Rational> out(t + 1);
    for (std::size_t i = 0; i <= std::min(t, a.truncation()); ++i) {
        if (a.coeff(i).is_zero())
            continue;
        for (std::size_t j = 0; i + j <= t && j <= b.truncation(); ++j)
            out[i + j] += a.coeff(i) * b.coeff(j);
    }
    return LadderSeries(a.var(), a.base() + b.base(), std::move(out), t);
}

LadderSeries operator+(const LadderSeries& a, const LadderSeries& b)
{
    if (a.var() != b.var())
        throw VariableMismatch(a.var(), b.var());
    const Rational& base = std::max(a.base(), b.base());
    const std::size_t off_a = half_steps(base, a.base());
    const std::size_t off_b = half_steps(base, b.base());
    const std::size_t t = std::min(a.truncation() + off_a, b.truncation() + off_b);
    std::vector<Rational> out(t + 1);
    for (std::size_t j = off_a; j <= t; ++j)
        out[j] += a.coeff(j - off_a);
    for (std::size_t j = off_b; j <= t; ++j)
        out[j] += b.coeff(j - off_b);
    return LadderSeries(a.var(), base, std::move(out), t);
}

LadderSeries operator-(const LadderSeries& a, const LadderSeries& b) { return a + (-b); }

LadderSeries substitute_successor(const LadderSeries& s)
{
    std::vector<Rational> out(s.truncation() + 1);
    for (std::size_t j = 0; j <= s.truncation(); ++j) {
        if (s.coeff(j).is_zero())
            continue;
        const Rational a = s.exponent(j);
        for (std::size_t i = 0; j + 2 * i <= s.truncation(); ++i)
            out[j + 2 * i] += s.coeff(j) * rational_binomial(a, i);
    }
    return LadderSeries(s.var(), s.base(), std::move(out), s.truncation());
}

} // namespace faulhaber
