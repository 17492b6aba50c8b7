#pragma once

#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// Truncated series  sum_{j=0}^{truncation} c_j v^(base - j/2)  in a single
/// variable v. Coefficients past `truncation` are unknown, not zero.
/// Integer-step series are embedded with zero odd-index coefficients.
class LadderSeries {
public:
    LadderSeries(Var v, Rational base, std::vector<Rational> coeffs, std::size_t truncation);

    static LadderSeries one(Var v, std::size_t truncation);

    Var var() const { return var_; }
    const Rational& base() const { return base_; }
    std::size_t truncation() const { return truncation_; }
    /// Throws std::out_of_range past the truncation.
    const Rational& coeff(std::size_t j) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational exponent(std::size_t j) const { return base_ - Rational(j, 2); }

    /// The same series truncated earlier.
    LadderSeries truncated(std::size_t truncation) const;

    LadderSeries operator-() const;
    LadderSeries& operator*=(const Rational& c);

    friend bool operator==(const LadderSeries&, const LadderSeries&) = default;

private:
    Var var_;
    Rational base_;
    std::vector<Rational> coeffs_;
    std::size_t truncation_;
};

/// Cauchy product; the result is known exactly as far as both operands allow.
LadderSeries operator*(const LadderSeries& a, const LadderSeries& b);

/// Sum of two series whose base exponents differ by a multiple of 1/2.
LadderSeries operator+(const LadderSeries& a, const LadderSeries& b);
LadderSeries operator-(const LadderSeries& a, const LadderSeries& b);

/// Re-expands s(v + 1) as a series in v, using
/// (v+1)^a = v^a sum_i C(a, i) v^(-i).
LadderSeries substitute_successor(const LadderSeries& s);

} // namespace faulhaber
