#include "faulhaber/powersum.hpp"

#include <string>

namespace faulhaber {

Polynomial power_sum(unsigned m, unsigned r)
{
    Polynomial p = Polynomial::monomial(Var::n, Rational(1), m);
    for (unsigned i = 0; i < r; ++i)
        p = antidifference(p);
    return p;
}

namespace {

Polynomial first_power_factor(unsigned r)
{
    return binomial_poly(Polynomial::linear(Var::n, Rational(r)), r + 1);
}

Polynomial square_factor(unsigned r)
{
    Polynomial two_n_plus_r(Var::n, {Rational(r), Rational(2)});
    return first_power_factor(r) * two_n_plus_r / Rational(r + 2);
}

} // namespace

Polynomial FaulhaberForm::factor_polynomial() const
{
    return factor == FactorKind::first_powers ? first_power_factor(r) : square_factor(r);
}

Polynomial FaulhaberForm::expand() const { return substitute_faulhaber(g, r) * factor_polynomial(); }

Polynomial FaulhaberForm::polynomial_in_N() const
{
    if (r != 1 || factor != FactorKind::first_powers)
        throw DomainError("only sum n^m with odd m is a pure polynomial in N");
    return g * Polynomial::linear(Var::N);
}

FaulhaberForm to_faulhaber_form(unsigned m, unsigned r)
{
    if (m < 1 || r < 1)
        throw DomainError("Faulhaber form needs m >= 1 and r >= 1");
    FaulhaberForm form;
    form.m = m;
    form.r = r;
    Polynomial q = exact_div(power_sum(m, r), first_power_factor(r));
    if (m % 2 == 0) {
        form.factor = FactorKind::squares;
        q = exact_div(q, Polynomial(Var::n, {Rational(r), Rational(2)})) * Rational(r + 2);
    } else {
        form.factor = FactorKind::first_powers;
    }
    // q(n) = h(n(n+r)) and N_r = n(n+r)/2, so g(N) = h(2N).
    Polynomial h = in_reflective_variable(q, Rational(r), Var::N);
    std::vector<Rational> cs = h.coeffs();
    Rational scale(1);
    for (auto& c : cs) {
        c *= scale;
        scale *= Rational(2);
    }
    form.g = Polynomial(Var::N, std::move(cs));
    return form;
}

OddReduction derive_odd_reduction(unsigned m)
{
    if (m < 2)
        throw DomainError("odd reduction needs m >= 2");
    const Polynomial nm = Polynomial::monomial(Var::n, Rational(1), m);
    const Polynomial diff = nm * pow(Polynomial::linear(Var::n, Rational(1)), m) -
                            pow(Polynomial::linear(Var::n, Rational(-1)), m) * nm;
    OddReduction red;
    red.m = m;
    red.leading = pow(Rational(2), static_cast<long>(m) - 1) / Rational(m);
    for (unsigned e = 2 * m - 1; e-- > 0;) {
        const Rational c = diff.coeff(e);
        if (e % 2 == 0) {
            if (!c.is_zero())
                throw DomainError("even power in n^m(n+1)^m - (n-1)^m n^m");
            continue;
        }
        if (c.is_zero())
            continue;
        red.s_terms.emplace_back(e, c);
        red.reduction.emplace_back(e, c / Rational(2 * m));
    }
    return red;
}

Polynomial odd_sum_by_reduction(unsigned m)
{
    if (m < 1)
        throw DomainError("odd_sum_by_reduction needs m >= 1");
    std::vector<Polynomial> sums{Polynomial(Var::N), Polynomial::linear(Var::N)};
    for (unsigned j = 2; j <= m; ++j) {
        const OddReduction red = derive_odd_reduction(j);
        Polynomial s = Polynomial::monomial(Var::N, red.leading, j);
        for (const auto& [exponent, coef] : red.reduction)
            s -= sums[(exponent + 1) / 2] * coef;
        sums.push_back(std::move(s));
    }
    return sums[m];
}

std::vector<Rational> even_from_odd(const Polynomial& odd_sum_in_N)
{
    if (odd_sum_in_N.var() != Var::N)
        throw VariableMismatch(odd_sum_in_N.var(), Var::N);
    if (!odd_sum_in_N.coeff(0).is_zero() || !odd_sum_in_N.coeff(1).is_zero())
        throw DomainError("odd power sum must start at N^2");
    if (odd_sum_in_N.degree() < 2)
        throw DomainError("odd power sum must have degree >= 2 in N");
    const auto m = static_cast<std::size_t>(odd_sum_in_N.degree()) - 1;
    std::vector<Rational> a(m);
    for (std::size_t k = 1; k <= m; ++k)
        a[k - 1] = odd_sum_in_N.coeff(k + 1) * Rational(k + 1);
    return a;
}

Polynomial odd_from_even(std::span<const Rational> a)
{
    std::vector<Rational> cs(a.size() + 2);
    for (std::size_t k = 1; k <= a.size(); ++k)
        cs[k + 1] = a[k - 1] / Rational(k + 1);
    return Polynomial(Var::N, std::move(cs));
}

std::vector<Rational> even_sum_coefficients(unsigned m)
{
    // sum n^2 = (n + 1/2) (2/3) N, so sum n^(2m) = (n + 1/2)/(2m+1) * (2(2m+1)/3) N g(N).
    const FaulhaberForm form = to_faulhaber_form(2 * m, 1);
    const Polynomial a_poly = form.g * Polynomial::linear(Var::N) * Rational(2 * (2 * m + 1), 3);
    std::vector<Rational> a(m);
    for (unsigned k = 1; k <= m; ++k)
        a[k - 1] = a_poly.coeff(k);
    return a;
}

Polynomial even_sum_from_coefficients(std::span<const Rational> a)
{
    std::vector<Rational> cs(a.size() + 1);
    for (std::size_t k = 1; k <= a.size(); ++k)
        cs[k] = a[k - 1];
    const Polynomial inner = substitute_faulhaber(Polynomial(Var::N, std::move(cs)), 1);
    const auto m = static_cast<long>(a.size());
    return inner * Polynomial::linear(Var::n, Rational(1, 2)) / Rational(2 * m + 1);
}

} // namespace faulhaber
