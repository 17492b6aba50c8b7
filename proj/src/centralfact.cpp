#include "faulhaber/centralfact.hpp"

#include "zseries.hpp"

namespace faulhaber {

std::vector<std::vector<Integer>> central_factorial_table(unsigned M)
{
    std::vector<std::vector<Integer>> t{{Integer(1)}};
    for (unsigned m = 1; m <= M; ++m) {
        const auto& prev = t.back();
        std::vector<Integer> row(m + 1, Integer(0));
        for (unsigned k = 1; k <= m; ++k) {
            const Integer same = k < prev.size() ? prev[k] : Integer(0);
            row[k] = Integer(k) * k * same + prev[k - 1];
        }
        t.push_back(std::move(row));
    }
    return t;
}

Integer central_factorial(unsigned m, unsigned k)
{
    if (k < 1 || k > m)
        throw DomainError("T(2m, 2k) needs 1 <= k <= m");
    return central_factorial_table(m)[m][k];
}

Polynomial central_binomial(unsigned k, unsigned shift)
{
    return binomial_poly(Polynomial::linear(Var::n, Rational(k + shift)), 2 * k + shift);
}

Polynomial basis_T(unsigned k)
{
    return binomial_poly(Polynomial::linear(Var::n, Rational(k + 1)), 2 * k + 1) +
           binomial_poly(Polynomial::linear(Var::n, Rational(k)), 2 * k + 1);
}

Polynomial basis_T_product(unsigned k)
{
    return Polynomial(Var::n, {Rational(1), Rational(2)}) * central_binomial(k) / Rational(2 * k + 1);
}

Polynomial basis_U(unsigned k)
{
    if (k < 1)
        throw DomainError("U_k needs k >= 1");
    return Polynomial::linear(Var::n) *
           binomial_poly(Polynomial::linear(Var::n, Rational(k - 1)), 2 * k - 1) / Rational(k);
}

Polynomial basis_U_sum(unsigned k)
{
    if (k < 1)
        throw DomainError("U_k needs k >= 1");
    return central_binomial(k) + binomial_poly(Polynomial::linear(Var::n, Rational(k - 1)), 2 * k);
}

std::vector<Integer> odd_powersum_cf(unsigned m)
{
    if (m < 1)
        throw DomainError("odd_powersum_cf needs m >= 1");
    const auto row = central_factorial_table(m)[m];
    std::vector<Integer> c(m);
    for (unsigned k = 1; k <= m; ++k)
        c[k - 1] = factorial(2 * k - 1) * row[k];
    return c;
}

std::vector<Rational> even_powersum_cf(unsigned m)
{
    if (m < 1)
        throw DomainError("even_powersum_cf needs m >= 1");
    std::vector<Polynomial> basis;
    for (unsigned k = 1; k <= m; ++k)
        basis.push_back(basis_U(k));
    // n^(2m) = sum c_k U_k and nabla T_k = U_k with T_k(0) = 0.
    return expand_in_basis(Polynomial::monomial(Var::n, Rational(1), 2 * m), basis);
}

Polynomial odd_powersum_cf_polynomial(unsigned m, unsigned r)
{
    if (r < 1)
        throw DomainError("odd_powersum_cf_polynomial needs r >= 1");
    const auto c = odd_powersum_cf(m);
    Polynomial p(Var::n);
    for (unsigned k = 1; k <= m; ++k)
        p += central_binomial(k, r - 1) * Rational(c[k - 1]);
    return p;
}

Polynomial even_powersum_cf_polynomial(std::span<const Rational> c)
{
    Polynomial p(Var::n);
    for (std::size_t k = 1; k <= c.size(); ++k)
        p += basis_T(static_cast<unsigned>(k)) * c[k - 1];
    return p;
}

std::vector<Rational> even_odd_cf_dual(std::span<const Rational> a)
{
    std::vector<Rational> out(a.size());
    for (std::size_t k = 1; k <= a.size(); ++k)
        out[k - 1] = a[k - 1] * Rational(2 * k + 1) / Rational(k);
    return out;
}

std::vector<Rational> odd_even_cf_dual(std::span<const Rational> odd)
{
    std::vector<Rational> out(odd.size());
    for (std::size_t k = 1; k <= odd.size(); ++k)
        out[k - 1] = odd[k - 1] * Rational(k) / Rational(2 * k + 1);
    return out;
}

Integer stirling2(unsigned m, unsigned k)
{
    std::vector<Integer> row{Integer(1)};
    for (unsigned i = 1; i <= m; ++i) {
        std::vector<Integer> next(i + 1, Integer(0));
        for (unsigned j = 1; j <= i; ++j) {
            const Integer same = j < row.size() ? row[j] : Integer(0);
            next[j] = Integer(j) * same + row[j - 1];
        }
        row = std::move(next);
    }
    return k < row.size() ? row[k] : Integer(0);
}

StirlingExpansion stirling_expansion(unsigned m)
{
    if (m < 1)
        throw DomainError("stirling_expansion needs m >= 1");
    StirlingExpansion e;
    for (unsigned k = 1; k <= m; ++k) {
        const Integer c = factorial(k) * stirling2(m, k);
        e.rising.push_back(c);
        e.alternating.push_back((m - k) % 2 == 0 ? c : Integer(-c));
    }
    return e;
}

Polynomial stirling_rising_polynomial(const StirlingExpansion& e)
{
    Polynomial p(Var::n);
    for (unsigned k = 1; k <= e.rising.size(); ++k)
        p += binomial_poly(Polynomial::linear(Var::n, Rational(1)), k + 1) * Rational(e.rising[k - 1]);
    return p;
}

Polynomial stirling_alternating_polynomial(const StirlingExpansion& e)
{
    Polynomial p(Var::n);
    for (unsigned k = 1; k <= e.alternating.size(); ++k)
        p += binomial_poly(Polynomial::linear(Var::n, Rational(k)), k + 1) * Rational(e.alternating[k - 1]);
    return p;
}

namespace {

detail::ZSeries central_gf(unsigned M)
{
    const std::size_t order = 2 * M;
    detail::ZSeries s(Var::x, order);
    const Polynomial two_x = Polynomial::monomial(Var::x, Rational(2), 1);
    for (unsigned j = 0; 2 * j + 1 <= order; ++j)
        s.c[2 * j + 1] = two_x * (pow(Rational(1, 2), 2 * j + 1) / Rational(factorial(2 * j + 1)));

    detail::ZSeries result(Var::x, order);
    result.c[0] = Polynomial::constant(Var::x, Rational(1));
    detail::ZSeries power = s * s;
    for (unsigned j = 1; 2 * j <= order; ++j) {
        const Rational inv = Rational(1) / Rational(factorial(2 * j));
        for (std::size_t i = 0; i <= order; ++i)
            result.c[i] += power.c[i] * inv;
        power = power * s * s;
    }
    return result;
}

} // namespace

Polynomial gf_central_coefficient(unsigned m)
{
    return central_gf(m).c[2 * m] * Rational(factorial(2 * m));
}

bool gf_check_central(unsigned M)
{
    const auto table = central_factorial_table(M);
    const detail::ZSeries s = central_gf(M);
    for (unsigned m = 0; m <= M; ++m) {
        std::vector<Rational> cs(2 * m + 1);
        for (unsigned k = 0; k <= m; ++k)
            cs[2 * k] = Rational(table[m][k]);
        if (s.c[2 * m] * Rational(factorial(2 * m)) != Polynomial(Var::x, cs))
            return false;
        if (2 * m + 1 <= s.order() && !s.c[2 * m + 1].is_zero())
            return false;
    }
    return true;
}

} // namespace faulhaber
