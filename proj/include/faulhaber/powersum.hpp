#pragma once

#include <span>
#include <utility>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// The r-fold repeated sum of m-th powers, sum^r n^m, as a polynomial in n.
/// r = 0 gives n^m; for r >= 1 the value at n = 0 is 0.
Polynomial power_sum(unsigned m, unsigned r);

enum class FactorKind {
    first_powers, // sum^r n^1 = C(n + r, r + 1)
    squares,      // sum^r n^2 = (2n + r)/(r + 2) * sum^r n^1
};

/// sum^r n^m = g(N_r) * factor, N_r = (n^2 + r n)/2.
struct FaulhaberForm {
    unsigned m = 0;
    unsigned r = 0;
    Polynomial g{Var::N};
    FactorKind factor = FactorKind::first_powers;

    /// The factor sum^r n^1 or sum^r n^2 as a polynomial in n.
    Polynomial factor_polynomial() const;
    /// g(N_r) * factor, expanded in n.
    Polynomial expand() const;
    /// For r = 1 and odd m the factor is N itself; returns g(N) * N.
    /// Throws DomainError otherwise.
    Polynomial polynomial_in_N() const;
};

/// Requires m, r >= 1.
FaulhaberForm to_faulhaber_form(unsigned m, unsigned r);

/// 2m sum n^(2m-1) = n^m (n+1)^m - S(n) with S(n) = sum_j s_j sum n^(2j-1),
/// i.e. sum n^(2m-1) = leading N^m - sum_j (s_j / 2m) sum n^(2j-1).
struct OddReduction {
    unsigned m = 0;
    Rational leading;                                   // 2^(m-1)/m
    std::vector<std::pair<unsigned, Rational>> s_terms; // (odd exponent 2j-1, s_j), descending
    std::vector<std::pair<unsigned, Rational>> reduction; // (odd exponent, s_j / 2m)
};

/// Requires m >= 2.
OddReduction derive_odd_reduction(unsigned m);

/// sum n^(2m-1) as a polynomial in N, built by applying the odd reduction
/// recursively from sum n = N.
Polynomial odd_sum_by_reduction(unsigned m);

/// Given sum n^(2m+1) = sum_k a_k/(k+1) N^(k+1), returns (a_1, ..., a_m) such
/// that sum n^(2m) = (n + 1/2)/(2m + 1) * sum_k a_k N^k. Throws DomainError if
/// the polynomial has a constant or linear N term.
std::vector<Rational> even_from_odd(const Polynomial& odd_sum_in_N);

/// Inverse of even_from_odd.
Polynomial odd_from_even(std::span<const Rational> a);

/// (a_1, ..., a_m) for sum n^(2m), read off to_faulhaber_form(2m, 1).
std::vector<Rational> even_sum_coefficients(unsigned m);

/// sum n^(2m) rebuilt from an a-list: (n + 1/2)/(2m + 1) * sum_k a_k N^k.
Polynomial even_sum_from_coefficients(std::span<const Rational> a);

} // namespace faulhaber
