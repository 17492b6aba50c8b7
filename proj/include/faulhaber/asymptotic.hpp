#pragma once

#include <string>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/ladder.hpp"

namespace faulhaber {

/// A_k^(w) from the double sum over ordinary Bernoulli numbers; valid for
/// every rational w.
Rational a_general(const Rational& w, unsigned k);

/// ((sqrt(1+4u) + 1) / (2 sqrt(u)))^(2w) = sum_j (w/(w+j/2)) C(w+j/2, j) u^(-j/2),
/// through u^(-order/2).
LadderSeries expansion_prefactor(const Rational& w, std::size_t order);

/// ((sqrt(1+4u) + 1)/2)^(-k) on the ladder with base -k/2, through ladder
/// index `order`.
LadderSeries inverse_root_power(unsigned k, std::size_t order);

/// prefactor(w) * sum_k C(2w, k) B_k ((sqrt(1+4u)+1)/2)^(-k), through u^(-order).
/// Even slots hold A_k^(w); odd slots vanish.
LadderSeries cancellation_ladder(const Rational& w, unsigned order);

/// True when every odd-ladder coefficient of cancellation_ladder is zero for
/// each w.
bool half_power_cancellation(const std::vector<Rational>& ws, unsigned order);

struct AsymptoticTerm {
    Rational exponent;    // power of u = n^2 + n
    Rational coefficient; // A_k^(w) / (alpha + 1)
};

/// sum_{k<=n} k^alpha - zeta(-alpha) ~ sum_k coefficient_k u^(exponent_k).
struct AsymptoticSeries {
    Rational alpha;
    Rational w;
    std::vector<AsymptoticTerm> terms;
    /// The series terminates (alpha a positive odd integer) and is complete.
    bool exact = false;
    std::string constant_tag = "zeta(-alpha)";
};

/// Terms k = 0..p. For alpha = 2m - 1 the series stops after the constant
/// term k = m. Throws DomainError at alpha = -1.
AsymptoticSeries build_series(const Rational& alpha, unsigned p);

class PrecisionError : public DomainError {
public:
    using DomainError::DomainError;
};

struct TelescopeReport {
    Rational alpha;
    unsigned p = 0;
    unsigned long n1 = 0, n2 = 0;
    unsigned long bits = 0;
    /// Arithmetic was exact (alpha a positive odd integer).
    bool exact = false;
    std::string series_difference; // S(n2) - S(n1)
    std::string direct_sum;        // sum_{n1 < k <= n2} k^alpha
    std::string error;             // |series_difference - direct_sum|
    std::string omitted_term;      // max over n1, n2 of |c_(p+1) u^(w-p-1)|
    double error_value = 0;
    double omitted_value = 0;
    bool within_bound = false;
    /// The same difference from p + 1 Euler-Maclaurin terms in n, for comparison.
    std::string euler_maclaurin_error;
    double euler_maclaurin_error_value = 0;
};

/// Compares the truncated series difference with the direct sum, which
/// cancels zeta(-alpha). Requires n2 > n1 >= 10. Throws PrecisionError when
/// rounding at `bits` of precision could mask the comparison.
TelescopeReport telescope_check(const Rational& alpha, unsigned p, unsigned long n1,
                                unsigned long n2, unsigned long bits = 200);

} // namespace faulhaber
