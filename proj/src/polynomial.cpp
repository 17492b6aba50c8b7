#include "faulhaber/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace faulhaber {

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::n: return "n";
    case Var::N: return "N";
    case Var::u: return "u";
    case Var::w: return "w";
    case Var::x: return "x";
    }
    return "?";
}

Var parse_var(std::string_view name)
{
    for (Var v : {Var::n, Var::N, Var::u, Var::w, Var::x})
        if (var_name(v) == name)
            return v;
    throw std::invalid_argument("unknown variable tag '" + std::string(name) + "'");
}

VariableMismatch::VariableMismatch(Var a, Var b)
    : std::invalid_argument("variable mismatch: " + std::string(var_name(a)) + " vs " +
                            std::string(var_name(b)))
{
}

Polynomial::Polynomial(Var v, std::vector<Rational> coeffs) : var_(v), coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(Var v, const Rational& c) { return Polynomial(v, {c}); }

Polynomial Polynomial::monomial(Var v, const Rational& c, std::size_t degree)
{
    std::vector<Rational> cs(degree + 1);
    cs[degree] = c;
    return Polynomial(v, std::move(cs));
}

Polynomial Polynomial::linear(Var v, const Rational& c) { return Polynomial(v, {c, Rational(1)}); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

void Polynomial::require_same_var(const Polynomial& o) const
{
    if (var_ != o.var_)
        throw VariableMismatch(var_, o.var_);
}

Rational Polynomial::operator()(const Rational& at) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::retag(Var v) const
{
    Polynomial p = *this;
    p.var_ = v;
    return p;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& c : p.coeffs_)
        c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_var(o);
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_var(o);
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    require_same_var(o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c)
{
    if (c.is_zero())
        throw DomainError("polynomial divided by zero");
    for (auto& x : coeffs_)
        x /= c;
    return *this;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        Rational m = abs(c);
        bool unit = m == Rational(1);
        if (!unit || k == 0)
            os << m.to_string();
        if (k > 0) {
            if (!unit)
                os << "*";
            os << var_name(p.var());
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

Polynomial pow(const Polynomial& p, unsigned e)
{
    Polynomial result = Polynomial::constant(p.var(), Rational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner)
{
    Polynomial acc(inner.var());
    const auto& cs = outer.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= inner;
        acc += Polynomial::constant(inner.var(), *it);
    }
    return acc;
}

Polynomial shift(const Polynomial& p, const Rational& a)
{
    return compose(p, Polynomial::linear(p.var(), a));
}

Polynomial derivative(const Polynomial& p)
{
    if (p.degree() < 1)
        return Polynomial(p.var());
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k <= out.size(); ++k)
        out[k - 1] = p.coeff(k) * Rational(k);
    return Polynomial(p.var(), std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (a.var() != b.var())
        throw VariableMismatch(a.var(), b.var());
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db)
        return {Polynomial(a.var()), a};
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
        Rational q = rem[k] / lead;
        quot[k - db] = q;
        if (q.is_zero())
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= q * b.coeff(j);
    }
    rem.resize(db);
    return {Polynomial(a.var(), std::move(quot)), Polynomial(a.var(), std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DomainError("inexact polynomial division: remainder " + to_string(r));
    return q;
}

Polynomial binomial_poly(const Polynomial& upper, unsigned k)
{
    Polynomial acc = Polynomial::constant(upper.var(), Rational(1));
    for (unsigned i = 0; i < k; ++i) {
        acc *= upper - Polynomial::constant(upper.var(), Rational(i));
        acc /= Rational(i + 1);
    }
    return acc;
}

Polynomial nabla(const Polynomial& p) { return p - shift(p, Rational(-1)); }

Polynomial antidifference(const Polynomial& p)
{
    if (p.is_zero())
        return p;
    // Newton coefficients: p(n) = sum_k c_k C(n, k) with c_k = Delta^k p(0).
    const auto d = static_cast<std::size_t>(p.degree());
    std::vector<Rational> diffs(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        diffs[i] = p(Rational(i));
    std::vector<Rational> newton(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        newton[k] = diffs[0];
        for (std::size_t i = 0; i + 1 < diffs.size() - k; ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
    }
    // sum_{j=1}^{n} C(j, k) = C(n+1, k+1) - [k = 0].
    const Polynomial n_plus_1 = Polynomial::linear(p.var(), Rational(1));
    Polynomial q = Polynomial::constant(p.var(), -newton[0]);
    for (std::size_t k = 0; k <= d; ++k)
        if (!newton[k].is_zero())
            q += binomial_poly(n_plus_1, static_cast<unsigned>(k + 1)) * newton[k];
    return q;
}

Polynomial substitute_faulhaber(const Polynomial& p, unsigned r)
{
    if (p.var() != Var::N)
        throw VariableMismatch(p.var(), Var::N);
    Polynomial n_r(Var::n, {Rational(0), Rational(r, 2), Rational(1, 2)});
    return compose(p, n_r);
}

Polynomial in_reflective_variable(const Polynomial& q, const Rational& r, Var result_var)
{
    const Polynomial t(q.var(), {Rational(0), r, Rational(1)});
    std::vector<Rational> digits;
    Polynomial rest = q;
    while (!rest.is_zero()) {
        auto [quot, rem] = divmod(rest, t);
        if (rem.degree() > 0)
            throw DomainError("polynomial is not a polynomial in n(n+" + r.to_string() + ")");
        digits.push_back(rem.coeff(0));
        rest = std::move(quot);
    }
    return Polynomial(result_var, std::move(digits));
}

std::vector<Rational> expand_in_basis(const Polynomial& p, std::span<const Polynomial> basis)
{
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return basis[a].degree() > basis[b].degree(); });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (basis[order[i]].degree() == basis[order[i + 1]].degree() || basis[order[i]].is_zero())
            throw DomainError("basis degrees must be distinct");

    std::vector<Rational> c(basis.size());
    Polynomial rest = p;
    for (std::size_t i : order) {
        const Polynomial& b = basis[i];
        if (b.var() != p.var())
            throw VariableMismatch(b.var(), p.var());
        c[i] = rest.coeff(static_cast<std::size_t>(b.degree())) / b.leading();
        rest -= b * c[i];
    }
    if (!rest.is_zero())
        throw DomainError("polynomial is not in the span of the basis");
    return c;
}

} // namespace faulhaber
