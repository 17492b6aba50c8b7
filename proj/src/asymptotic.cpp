#include "faulhaber/asymptotic.hpp"

#include <algorithm>
#include <optional>

#include "bigfloat.hpp"
#include "faulhaber/bernoulli.hpp"

namespace faulhaber {

namespace {

// (w/(w+l/2)) C(w+l/2, l), written as (w/l) C(w+l/2-1, l-1) so that w + l/2 = 0
// needs no special case.
Rational prefactor_coeff(const Rational& w, std::size_t l)
{
    if (l == 0)
        return Rational(1);
    const Rational half_l(Integer(l), Integer(2));
    return w / Rational(l) * rational_binomial(w + half_l - Rational(1), l - 1);
}

} // namespace

Rational a_general(const Rational& w, unsigned k)
{
    const auto b = bernoulli_cache().prefix(2 * k);
    const Rational two_w = Rational(2) * w;
    Rational total;
    for (unsigned l = 0; l <= 2 * k; ++l) {
        const unsigned n = 2 * k - l;
        Rational inner = rational_binomial(two_w, n) * b[n];
        Rational tail;
        for (unsigned j = 1; j + 1 <= n; ++j) {
            if (b[j].is_zero())
                continue;
            const Rational upper = Rational(k) - Rational(Integer(l), Integer(2)) - Rational(j + 1);
            tail += rational_binomial(two_w, j) * Rational(Integer(j), Integer(n - j)) *
                    rational_binomial(upper, n - j - 1) * b[j];
        }
        inner -= tail / Rational(2);
        total += prefactor_coeff(w, l) * inner;
    }
    return total;
}

LadderSeries expansion_prefactor(const Rational& w, std::size_t order)
{
    std::vector<Rational> cs(order + 1);
    for (std::size_t j = 0; j <= order; ++j)
        cs[j] = prefactor_coeff(w, j);
    return LadderSeries(Var::u, Rational(0), std::move(cs), order);
}

LadderSeries inverse_root_power(unsigned k, std::size_t order)
{
    std::vector<Rational> cs(order + 1);
    cs[0] = Rational(1);
    const Rational K(k);
    for (std::size_t j = 1; j <= order; ++j) {
        const Rational upper = Rational(Integer(j), Integer(2)) - K / Rational(2) - Rational(1);
        cs[j] = -(K / Rational(2 * j)) * rational_binomial(upper, j - 1);
    }
    return LadderSeries(Var::u, -Rational(Integer(k), Integer(2)), std::move(cs), order);
}

LadderSeries cancellation_ladder(const Rational& w, unsigned order)
{
    const std::size_t top = 2 * static_cast<std::size_t>(order);
    const auto b = bernoulli_cache().prefix(static_cast<unsigned>(top));
    LadderSeries inner(Var::u, Rational(0), {}, top);
    for (std::size_t k = 0; k <= top; ++k) {
        const Rational c = rational_binomial(Rational(2) * w, k) * b[k];
        if (c.is_zero())
            continue;
        LadderSeries term = inverse_root_power(static_cast<unsigned>(k), top - k);
        term *= c;
        inner = inner + term;
    }
    return expansion_prefactor(w, top) * inner;
}

bool half_power_cancellation(const std::vector<Rational>& ws, unsigned order)
{
    for (const auto& w : ws) {
        const LadderSeries s = cancellation_ladder(w, order);
        for (std::size_t j = 1; j <= s.truncation(); j += 2)
            if (!s.coeff(j).is_zero())
                return false;
    }
    return true;
}

AsymptoticSeries build_series(const Rational& alpha, unsigned p)
{
    const Rational alpha1 = alpha + Rational(1);
    if (alpha1.is_zero())
        throw DomainError("alpha = -1 has no power-law asymptotic series");
    AsymptoticSeries s;
    s.alpha = alpha;
    s.w = alpha1 / Rational(2);
    unsigned last = p;
    const bool terminating = s.w.is_integer() && s.w.sign() > 0;
    if (terminating) {
        const auto m = static_cast<unsigned>(s.w.numerator().get_ui());
        last = std::min(p, m);
        s.exact = p >= m;
    }
    for (unsigned k = 0; k <= last; ++k)
        s.terms.push_back({s.w - Rational(k), a_general(s.w, k) / alpha1});
    return s;
}

namespace {

using detail::BigFloat;

BigFloat real_power(mpfr_prec_t bits, unsigned long base, const Rational& e)
{
    BigFloat x(bits), y(bits, e);
    mpfr_set_ui(x.get(), base, MPFR_RNDN);
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    mpfr_mul(x.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_exp(x.get(), x.get(), MPFR_RNDN);
    return x;
}

Rational rational_power(unsigned long base, const Rational& e)
{
    return pow(Rational(base), e.numerator().get_si());
}

struct SeriesTerms {
    std::vector<AsymptoticTerm> kept;
    std::optional<AsymptoticTerm> next;
};

SeriesTerms split_terms(const AsymptoticSeries& full, unsigned p)
{
    SeriesTerms t;
    for (std::size_t k = 0; k < full.terms.size(); ++k) {
        if (k <= p)
            t.kept.push_back(full.terms[k]);
        else if (!t.next)
            t.next = full.terms[k];
    }
    return t;
}

/// The first `count` nonzero terms of B_(alpha+1)(n+1)/(alpha+1) expanded in n.
std::vector<AsymptoticTerm> euler_maclaurin_terms(const Rational& alpha, unsigned count)
{
    const Rational z = alpha + Rational(1);
    const LadderSeries s = substitute_successor(generalized_bernoulli(z, 2 * count + 4, Var::n));
    std::vector<AsymptoticTerm> out;
    for (std::size_t j = 0; j <= s.truncation() && out.size() < count; ++j)
        if (!s.coeff(j).is_zero())
            out.push_back({s.exponent(j), s.coeff(j) / z});
    return out;
}

double to_double(const Rational& r) { return r.raw().get_d(); }

} // namespace

TelescopeReport telescope_check(const Rational& alpha, unsigned p, unsigned long n1,
                                unsigned long n2, unsigned long bits)
{
    if (n1 < 10 || n2 <= n1)
        throw DomainError("telescope check needs n2 > n1 >= 10");
    if (bits < 64)
        throw DomainError("telescope check needs at least 64 bits");
    const AsymptoticSeries full = build_series(alpha, p + 1);
    const SeriesTerms terms = split_terms(full, p);
    const auto prec = static_cast<mpfr_prec_t>(bits);
    const unsigned long u1 = n1 * n1 + n1, u2 = n2 * n2 + n2;

    TelescopeReport rep;
    rep.alpha = alpha;
    rep.p = p;
    rep.n1 = n1;
    rep.n2 = n2;
    rep.bits = bits;

    const auto em = euler_maclaurin_terms(alpha, p + 1);

    if (alpha.is_integer() && full.w.is_integer()) {
        // Odd integer alpha: every power is rational, so compare exactly.
        const auto eval = [&](const std::vector<AsymptoticTerm>& ts, unsigned long x) {
            Rational acc;
            for (const auto& t : ts)
                acc += t.coefficient * rational_power(x, t.exponent);
            return acc;
        };
        Rational direct;
        for (unsigned long k = n1 + 1; k <= n2; ++k)
            direct += rational_power(k, alpha);
        const Rational diff = eval(terms.kept, u2) - eval(terms.kept, u1);
        const Rational err = abs(diff - direct);
        Rational omitted;
        if (terms.next)
            omitted = std::max(abs(terms.next->coefficient * rational_power(u1, terms.next->exponent)),
                               abs(terms.next->coefficient * rational_power(u2, terms.next->exponent)));
        const Rational em_err = abs(eval(em, n2) - eval(em, n1) - direct);
        rep.exact = true;
        rep.series_difference = BigFloat(prec, diff).to_string();
        rep.direct_sum = BigFloat(prec, direct).to_string();
        rep.error = BigFloat(prec, err).to_string();
        rep.omitted_term = BigFloat(prec, omitted).to_string();
        rep.error_value = to_double(err);
        rep.omitted_value = to_double(omitted);
        rep.within_bound = err <= omitted;
        rep.euler_maclaurin_error = BigFloat(prec, em_err).to_string();
        rep.euler_maclaurin_error_value = to_double(em_err);
        return rep;
    }

    const auto eval = [&](const std::vector<AsymptoticTerm>& ts, unsigned long x) {
        BigFloat acc(prec);
        for (const auto& t : ts) {
            BigFloat term = real_power(prec, x, t.exponent);
            BigFloat c(prec, t.coefficient);
            mpfr_mul(term.get(), term.get(), c.get(), MPFR_RNDN);
            mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        }
        return acc;
    };
    BigFloat direct(prec);
    for (unsigned long k = n1 + 1; k <= n2; ++k) {
        const BigFloat term = real_power(prec, k, alpha);
        mpfr_add(direct.get(), direct.get(), term.get(), MPFR_RNDN);
    }
    const BigFloat s1 = eval(terms.kept, u1), s2 = eval(terms.kept, u2);
    BigFloat diff(prec), err(prec);
    mpfr_sub(diff.get(), s2.get(), s1.get(), MPFR_RNDN);
    mpfr_sub(err.get(), diff.get(), direct.get(), MPFR_RNDN);
    mpfr_abs(err.get(), err.get(), MPFR_RNDN);

    BigFloat omitted(prec);
    if (terms.next) {
        const std::vector<AsymptoticTerm> one{*terms.next};
        BigFloat o1 = eval(one, u1), o2 = eval(one, u2);
        mpfr_abs(o1.get(), o1.get(), MPFR_RNDN);
        mpfr_abs(o2.get(), o2.get(), MPFR_RNDN);
        mpfr_max(omitted.get(), o1.get(), o2.get(), MPFR_RNDN);
    }

    // Rounding allowance: largest magnitude involved, times the operation
    // count, times a few ulps.
    BigFloat scale(prec), guard(prec);
    mpfr_abs(scale.get(), s2.get(), MPFR_RNDN);
    mpfr_max(scale.get(), scale.get(), direct.get(), MPFR_RNDN);
    {
        BigFloat a1(prec);
        mpfr_abs(a1.get(), s1.get(), MPFR_RNDN);
        mpfr_max(scale.get(), scale.get(), a1.get(), MPFR_RNDN);
    }
    mpfr_mul_ui(guard.get(), scale.get(), (n2 - n1) + 4 * (p + 2), MPFR_RNDU);
    mpfr_mul_2si(guard.get(), guard.get(), -static_cast<long>(bits) + 4, MPFR_RNDU);
    BigFloat resolvable(prec);
    mpfr_mul_2si(resolvable.get(), omitted.get(), -10, MPFR_RNDN);
    if (mpfr_zero_p(omitted.get()) || mpfr_cmp(guard.get(), resolvable.get()) >= 0)
        throw PrecisionError("rounding at " + std::to_string(bits) +
                             " bits is too coarse to resolve the omitted-term bound");

    BigFloat em_err(prec);
    {
        const BigFloat e2 = eval(em, n2), e1 = eval(em, n1);
        mpfr_sub(em_err.get(), e2.get(), e1.get(), MPFR_RNDN);
        mpfr_sub(em_err.get(), em_err.get(), direct.get(), MPFR_RNDN);
        mpfr_abs(em_err.get(), em_err.get(), MPFR_RNDN);
    }

    rep.series_difference = diff.to_string();
    rep.direct_sum = direct.to_string();
    rep.error = err.to_string();
    rep.omitted_term = omitted.to_string();
    rep.error_value = err.to_double();
    rep.omitted_value = omitted.to_double();
    rep.within_bound = mpfr_cmp(err.get(), omitted.get()) <= 0;
    rep.euler_maclaurin_error = em_err.to_string();
    rep.euler_maclaurin_error_value = em_err.to_double();
    return rep;
}

} // namespace faulhaber
