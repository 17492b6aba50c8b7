#pragma once

#include <mutex>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/ladder.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// Memoized Bernoulli numbers, B_1 = -1/2. Grows monotonically; safe to
/// query from several threads.
class BernoulliCache {
public:
    Rational operator()(unsigned m);
    /// B_0 .. B_m.
    std::vector<Rational> prefix(unsigned m);

private:
    void extend_locked(unsigned m);

    std::mutex mutex_;
    std::vector<Rational> values_{Rational(1)};
};

BernoulliCache& bernoulli_cache();

Rational bernoulli_number(unsigned m);

/// B_m(x) = sum_k C(m, k) B_k x^(m-k), in variable `v`.
Polynomial bernoulli_polynomial(unsigned m, Var v = Var::x);

/// B_z(x) = x^z sum_{k=0}^{p} C(z, k) B_k x^(-k) as a formal ladder series
/// in x with base exponent z (odd ladder slots are zero).
LadderSeries generalized_bernoulli(const Rational& z, unsigned p, Var v = Var::x);

} // namespace faulhaber
