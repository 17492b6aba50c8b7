#include "faulhaber/reflect.hpp"

#include <map>

#include "faulhaber/centralfact.hpp"
#include "linalg.hpp"

namespace faulhaber {

namespace {

Polynomial mirror(const Polynomial& f, long r)
{
    return compose(f, Polynomial(f.var(), {Rational(-r), Rational(-1)}));
}

long floor_div2(long k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

bool is_odd(long v) { return v % 2 != 0; }

} // namespace

bool is_reflective(const Polynomial& f, long r) { return f == mirror(f, r); }

bool is_anti_reflective(const Polynomial& f, long r) { return f == -mirror(f, r); }

SigmaConstant sigma_constant(const Polynomial& f, long r)
{
    if (is_reflective(f, r)) {
        const Polynomial q = antidifference(f.retag(Var::n));
        if (is_odd(r))
            return {false, -q(Rational(-(r + 1) / 2))};
        const Rational x(-r / 2);
        return {false, f(x) / Rational(2) - q(x)};
    }
    if (is_anti_reflective(f, r))
        return {true, Rational(0)};
    throw DomainError("function is neither " + std::to_string(r) + "-reflective nor anti-" +
                      std::to_string(r) + "-reflective");
}

TabulatedFunction::TabulatedFunction(Polynomial p) : poly_(std::move(p)) {}

TabulatedFunction::TabulatedFunction(long lo, std::vector<Rational> values)
    : lo_(lo), values_(std::move(values))
{
    if (values_.empty())
        throw DomainError("tabulated function needs at least one value");
}

const Polynomial& TabulatedFunction::polynomial() const
{
    if (!poly_)
        throw DomainError("function is tabulated, not polynomial");
    return *poly_;
}

bool TabulatedFunction::covers(long x) const { return poly_ || (x >= lo() && x <= hi()); }

Rational TabulatedFunction::operator()(long x) const
{
    if (poly_)
        return (*poly_)(Rational(x));
    if (!covers(x))
        throw WindowTooSmall("value at " + std::to_string(x) + " is outside the window " +
                             std::to_string(lo()) + ".." + std::to_string(hi()));
    return values_[static_cast<std::size_t>(x - lo_)];
}

namespace {

Decomposition decompose_polynomial(const Polynomial& f, long r, long s)
{
    const std::size_t n = static_cast<std::size_t>(std::max(f.degree(), 0L)) + 1;
    // Unknowns: g_0..g_(n-1), h_0..h_(n-1).
    detail::Matrix a;
    std::vector<Rational> b;
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Rational> row(2 * n);
        row[d] = Rational(1);
        row[n + d] = Rational(1);
        a.push_back(std::move(row));
        b.push_back(f.coeff(d));
    }
    const auto mirror_rows = [&](long shift, std::size_t offset, int sign) {
        // Coefficient of x^d in p(x) - sign * p(-x-shift), linear in p's coefficients.
        std::vector<std::vector<Rational>> image(n, std::vector<Rational>(2 * n));
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial e = Polynomial::monomial(f.var(), Rational(1), j);
            const Polynomial diff = e - mirror(e, shift) * Rational(sign);
            for (std::size_t d = 0; d < n; ++d)
                image[d][offset + j] = diff.coeff(d);
        }
        for (auto& row : image) {
            a.push_back(std::move(row));
            b.emplace_back(0);
        }
    };
    mirror_rows(r, 0, 1);
    mirror_rows(s, n, -1);
    const auto sol = detail::solve(std::move(a), std::move(b));
    if (!sol || !sol->free_columns.empty())
        throw DomainError("polynomial decomposition failed");
    std::vector<Rational> g(sol->particular.begin(), sol->particular.begin() + n);
    std::vector<Rational> h(sol->particular.begin() + n, sol->particular.end());
    return {TabulatedFunction(Polynomial(f.var(), g)), TabulatedFunction(Polynomial(f.var(), h)), true};
}

Decomposition decompose_table(const TabulatedFunction& f, long r, long s, const Rational& anchor)
{
    const long lo = f.lo(), hi = f.hi();
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    const auto idx = [&](long x) { return static_cast<std::size_t>(x - lo); };
    detail::Matrix a;
    std::vector<Rational> b;
    const auto add_row = [&](std::map<std::size_t, Rational> entries, Rational rhs) {
        std::vector<Rational> row(2 * n);
        for (auto& [col, v] : entries)
            row[col] += v;
        a.push_back(std::move(row));
        b.push_back(std::move(rhs));
    };
    for (long x = lo; x <= hi; ++x) {
        add_row({{idx(x), Rational(1)}, {n + idx(x), Rational(1)}}, f(x));
        const long yg = -x - r;
        if (yg >= lo && yg <= hi && yg != x)
            add_row({{idx(x), Rational(1)}, {idx(yg), Rational(-1)}}, Rational(0));
        const long yh = -x - s;
        if (yh >= lo && yh <= hi) {
            std::map<std::size_t, Rational> e{{n + idx(x), Rational(1)}};
            e[n + idx(yh)] += Rational(1);
            add_row(std::move(e), Rational(0));
        }
    }
    const bool free_constant = !is_odd(r) && is_odd(s);
    if (free_constant) {
        if (lo > 0 || hi < 0)
            throw WindowTooSmall("the anchor h(0) needs 0 inside the window");
        add_row({{n + idx(0), Rational(1)}}, anchor);
    }
    const auto sol = detail::solve(std::move(a), std::move(b));
    if (!sol)
        throw DomainError("tabulated values admit no decomposition");
    if (!sol->free_columns.empty())
        throw WindowTooSmall("window " + std::to_string(lo) + ".." + std::to_string(hi) +
                             " does not determine the decomposition");
    std::vector<Rational> g(sol->particular.begin(), sol->particular.begin() + n);
    std::vector<Rational> h(sol->particular.begin() + n, sol->particular.end());
    return {TabulatedFunction(lo, g), TabulatedFunction(lo, h), !free_constant};
}

} // namespace

Decomposition decompose(const TabulatedFunction& f, long r, long s, std::optional<Rational> anchor)
{
    if (f.is_polynomial())
        return decompose_polynomial(f.polynomial(), r, s);
    return decompose_table(f, r, s, anchor.value_or(Rational(0)));
}

std::vector<Rational> a_expansion(const TabulatedFunction& f, unsigned kmax)
{
    const long need_lo = -static_cast<long>((kmax + 1) / 2);
    const long need_hi = static_cast<long>(kmax / 2);
    if (!f.covers(need_lo) || !f.covers(need_hi))
        throw WindowTooSmall("a-expansion to order " + std::to_string(kmax) + " needs the window " +
                             std::to_string(need_lo) + ".." + std::to_string(need_hi));
    std::vector<Rational> a;
    for (unsigned k = 0; k <= kmax; ++k) {
        const long x = floor_div2(k);
        Rational acc;
        for (unsigned i = 0; i <= k; ++i) {
            const Rational term = Rational(binomial(Integer(k), i)) * f(x - static_cast<long>(i));
            acc += i % 2 == 0 ? term : -term;
        }
        a.push_back(acc);
    }
    return a;
}

std::vector<Rational> b_expansion(const TabulatedFunction& f, unsigned kmax)
{
    return b_from_a(a_expansion(f, kmax));
}

std::vector<Rational> a_from_b(std::span<const Rational> b)
{
    std::vector<Rational> a(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        a[k] = k % 2 == 0 ? b[k] : -b[k];
        if (k > 0)
            a[k] += Rational(2) * b[k - 1];
    }
    return a;
}

std::vector<Rational> b_from_a(std::span<const Rational> a)
{
    std::vector<Rational> b(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        Rational acc;
        for (std::size_t j = 0; j <= k; ++j) {
            const Rational term = pow(Rational(2), static_cast<long>(k - j)) * a[j];
            const std::size_t e = (j + 1) / 2 + k / 2;
            acc += e % 2 == 0 ? term : -term;
        }
        b[k] = acc;
    }
    return b;
}

Polynomial a_series_polynomial(std::span<const Rational> a)
{
    Polynomial p(Var::n);
    for (std::size_t k = 0; k < a.size(); ++k)
        p += binomial_poly(Polynomial::linear(Var::n, Rational(k / 2)), static_cast<unsigned>(k)) * a[k];
    return p;
}

Polynomial b_series_polynomial(std::span<const Rational> b)
{
    Polynomial p(Var::n);
    for (std::size_t k = 0; k < b.size(); ++k) {
        const auto j = static_cast<unsigned>(k / 2);
        p += (k % 2 == 0 ? basis_T(j) : basis_U(j + 1)) * b[k];
    }
    return p;
}

} // namespace faulhaber
