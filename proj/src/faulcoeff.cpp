#include "faulhaber/faulcoeff.hpp"

#include <functional>

#include "faulhaber/bernoulli.hpp"
#include "linalg.hpp"
#include "zseries.hpp"

namespace faulhaber {

PivotZeroError::PivotZeroError(const Rational& w_, unsigned k_)
    : DomainError("recurrence pivot w - k vanishes at w = " + w_.to_string() +
                  ", k = " + std::to_string(k_)),
      w(w_), k(k_)
{
}

CoefficientTable a_by_recurrence(const Rational& w, unsigned kmax, SpecialValues special)
{
    CoefficientTable t{w, {Rational(1)}};
    for (unsigned k = 1; k <= kmax; ++k) {
        const Rational pivot = w - Rational(k);
        if (pivot.is_zero()) {
            if (special == SpecialValues::reject)
                throw PivotZeroError(w, k);
            t.entries.push_back(bernoulli_number(2 * k));
            continue;
        }
        Rational acc;
        for (unsigned j = 0; j < k; ++j)
            acc += rational_binomial(w - Rational(j), 2 * k + 1 - 2 * j) * t.entries[j];
        t.entries.push_back(-acc / pivot);
    }
    return t;
}

std::vector<Polynomial> a_symbolic_table(unsigned kmax)
{
    std::vector<Polynomial> a{Polynomial::constant(Var::w, Rational(1))};
    for (unsigned k = 1; k <= kmax; ++k) {
        Polynomial acc(Var::w);
        for (unsigned j = 0; j < k; ++j)
            acc += binomial_poly(Polynomial::linear(Var::w, Rational(-static_cast<long>(j))),
                                 2 * k + 1 - 2 * j) *
                   a[j];
        a.push_back(exact_div(-acc, Polynomial::linear(Var::w, Rational(-static_cast<long>(k)))));
    }
    return a;
}

Polynomial a_symbolic(unsigned k) { return a_symbolic_table(k).back(); }

CoefficientTable a_by_jacobi(const Rational& w, unsigned kmax)
{
    if (w.sign() < 0)
        throw DomainError("Jacobi recurrence needs w >= 0");
    const Integer steps = floor(w);
    Rational cur = w - Rational(steps);
    std::vector<Rational> prev;
    if (cur.is_zero()) {
        prev.assign(kmax + 1, Rational(0));
        prev[0] = Rational(1);
    } else {
        prev = a_by_recurrence(cur, kmax).entries;
    }
    std::vector<Polynomial> symbolic;
    for (Integer s = 0; s < steps; ++s) {
        cur += Rational(1);
        std::vector<Rational> next(kmax + 1);
        next[0] = Rational(1);
        const Rational two_w = Rational(2) * cur;
        for (unsigned k = 1; k <= kmax; ++k) {
            const Rational wk = cur - Rational(k);
            const Rational factor = (Rational(2) * wk) * (Rational(2) * wk - Rational(1));
            if (factor.is_zero()) {
                if (wk.is_zero()) {
                    next[k] = bernoulli_number(2 * k);
                } else {
                    if (symbolic.size() <= k)
                        symbolic = a_symbolic_table(kmax);
                    next[k] = symbolic[k](cur);
                }
                continue;
            }
            next[k] = (two_w * (two_w - Rational(1)) * prev[k] -
                       (wk + Rational(1)) * wk * next[k - 1]) /
                      factor;
        }
        prev = std::move(next);
    }
    return {w, prev};
}

Rational a_explicit(unsigned m, unsigned k)
{
    if (k >= m)
        throw DomainError("explicit formula needs k < m");
    const unsigned d = m - k;
    Rational acc;
    for (unsigned j = 0; j < d; ++j) {
        const Rational term = Rational(binomial(Integer(2 * m), d - j)) *
                              Rational(binomial(Integer(d + j), j)) *
                              Rational(Integer(d - j), Integer(d + j)) *
                              bernoulli_number(m + k + j);
        acc += term;
    }
    return d % 2 == 0 ? acc : -acc;
}

Rational faulhaber_determinant(const Rational& w, unsigned k)
{
    if (k == 0)
        return Rational(1);
    detail::Matrix a(k, std::vector<Rational>(k));
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j) {
            const long lower = 2 * (static_cast<long>(i) - static_cast<long>(j)) + 3;
            if (lower >= 0)
                a[i - 1][j - 1] = rational_binomial(w - Rational(k) + Rational(i),
                                                    static_cast<unsigned long>(lower));
        }
    return detail::determinant(std::move(a));
}

DeterminantResult a_by_determinant(const Rational& w, unsigned k)
{
    DeterminantResult r{faulhaber_determinant(w, k), std::nullopt};
    Rational prefactor(1);
    for (unsigned i = 1; i <= k; ++i)
        prefactor *= Rational(i) - w;
    if (!prefactor.is_zero())
        r.A = r.D / prefactor;
    return r;
}

Integer staircase_count(unsigned w, unsigned k, unsigned long node_cap)
{
    if (k < 1 || w <= k)
        throw DomainError("staircase needs w > k >= 1");
    std::vector<unsigned> a(3 * k + 1);
    unsigned long nodes = 0;
    Integer count = 0;
    // Cell i (1-based) sits in row (i+2)/3; a[0] is an unused sentinel.
    std::function<void(unsigned)> place = [&](unsigned i) {
        if (i > 3 * k) {
            ++count;
            return;
        }
        if (++nodes > node_cap)
            throw InstanceTooLarge("staircase search exceeded " + std::to_string(node_cap) + " nodes");
        const unsigned row = (i + 2) / 3;
        const unsigned col = (i - 1) % 3;
        const unsigned hi = w - k + row;
        unsigned lo = 1;
        if (col > 0)
            lo = a[i - 1] + 1;
        if (row > 1 && col > 0)
            lo = std::max(lo, a[i - 4] + 1);
        for (unsigned v = lo; v <= hi; ++v) {
            a[i] = v;
            place(i + 1);
        }
    };
    place(1);
    return count;
}

namespace {

detail::ZSeries faulhaber_gf(unsigned M)
{
    const std::size_t order = 2 * M;
    detail::ZSeries cosh_part(Var::u, order);
    const Polynomial one_plus_4u(Var::u, {Rational(1), Rational(4)});
    std::vector<Rational> sinh_over(order + 1);
    for (unsigned j = 0; 2 * j <= order; ++j) {
        const Rational half_pow = pow(Rational(1, 2), 2 * j);
        cosh_part.c[2 * j] = pow(one_plus_4u, j) * (half_pow / Rational(factorial(2 * j)));
        sinh_over[2 * j] = half_pow / Rational(factorial(2 * j + 1));
    }
    const auto inv = detail::invert(sinh_over);
    detail::ZSeries denom(Var::u, order);
    for (std::size_t i = 0; i <= order; ++i)
        denom.c[i] = Polynomial::constant(Var::u, inv[i]);
    return cosh_part * denom;
}

Polynomial table_side(unsigned m)
{
    const auto a = a_by_recurrence(Rational(m), m).entries;
    std::vector<Rational> cs(m + 1);
    for (unsigned k = 0; k <= m; ++k)
        cs[m - k] = a[k];
    return Polynomial(Var::u, cs);
}

} // namespace

bool closed_form_check(unsigned m)
{
    if (m < 1)
        throw DomainError("closed_form_check needs m >= 1");
    const Polynomial u(Var::n, {Rational(0), Rational(1), Rational(1)});
    const Polynomial rhs = shift(bernoulli_polynomial(2 * m, Var::n), Rational(1));
    return compose(table_side(m), u) == rhs;
}

Polynomial gf_faulhaber_coefficient(unsigned m)
{
    return faulhaber_gf(m).c[2 * m] * Rational(factorial(2 * m));
}

bool gf_check_faulhaber(unsigned M)
{
    const detail::ZSeries s = faulhaber_gf(M);
    for (unsigned m = 0; m <= M; ++m) {
        if (s.c[2 * m] * Rational(factorial(2 * m)) != table_side(m))
            return false;
        if (2 * m + 1 <= s.order() && !s.c[2 * m + 1].is_zero())
            return false;
    }
    return true;
}

} // namespace faulhaber
