#pragma once

#include <algorithm>
#include <vector>

#include "faulhaber/polynomial.hpp"

namespace faulhaber::detail {

/// Truncated power series in an auxiliary variable z, coefficients are
/// polynomials in `coeff_var`. Terms z^0 .. z^order.
struct ZSeries {
    Var coeff_var;
    std::vector<Polynomial> c;

    ZSeries(Var v, std::size_t order) : coeff_var(v), c(order + 1, Polynomial(v)) {}

    std::size_t order() const { return c.size() - 1; }
};

inline ZSeries operator*(const ZSeries& a, const ZSeries& b)
{
    ZSeries out(a.coeff_var, std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i)
        for (std::size_t j = 0; i + j <= out.order(); ++j)
            if (!a.c[i].is_zero() && !b.c[j].is_zero())
                out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

/// 1/s for a series with constant coefficients and nonzero constant term.
inline std::vector<Rational> invert(const std::vector<Rational>& s)
{
    std::vector<Rational> inv(s.size());
    inv[0] = Rational(1) / s[0];
    for (std::size_t n = 1; n < s.size(); ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc += s[k] * inv[n - k];
        inv[n] = -acc / s[0];
    }
    return inv;
}

} // namespace faulhaber::detail
