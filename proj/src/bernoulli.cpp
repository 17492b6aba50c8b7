#include "faulhaber/bernoulli.hpp"

namespace faulhaber {

void BernoulliCache::extend_locked(unsigned m)
{
    // sum_{k=0}^{j} C(j+1, k) B_k = 0
    for (auto j = static_cast<unsigned>(values_.size()); j <= m; ++j) {
        Rational acc;
        for (unsigned k = 0; k < j; ++k) {
            if (values_[k].is_zero())
                continue;
            acc += Rational(binomial(Integer(j + 1), k)) * values_[k];
        }
        values_.push_back(-acc / Rational(j + 1));
    }
}

Rational BernoulliCache::operator()(unsigned m)
{
    std::lock_guard lock(mutex_);
    extend_locked(m);
    return values_[m];
}

std::vector<Rational> BernoulliCache::prefix(unsigned m)
{
    std::lock_guard lock(mutex_);
    extend_locked(m);
    return {values_.begin(), values_.begin() + m + 1};
}

BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(unsigned m) { return bernoulli_cache()(m); }

Polynomial bernoulli_polynomial(unsigned m, Var v)
{
    const auto b = bernoulli_cache().prefix(m);
    std::vector<Rational> cs(m + 1);
    for (unsigned k = 0; k <= m; ++k)
        cs[m - k] = Rational(binomial(Integer(m), k)) * b[k];
    return Polynomial(v, std::move(cs));
}

LadderSeries generalized_bernoulli(const Rational& z, unsigned p, Var v)
{
    const auto b = bernoulli_cache().prefix(p);
    std::vector<Rational> cs(2 * p + 1);
    for (unsigned k = 0; k <= p; ++k)
        cs[2 * k] = rational_binomial(z, k) * b[k];
    return LadderSeries(v, z, std::move(cs), 2 * p);
}

} // namespace faulhaber
