#pragma once

#include <span>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// T(2m, 2k) for 1 <= k <= m.
Integer central_factorial(unsigned m, unsigned k);

/// Rows m = 0..M of T(2m, 2k), row m indexed by k = 0..m. T(0, 0) = 1.
std::vector<std::vector<Integer>> central_factorial_table(unsigned M);

/// T_k(n) = C(n+k+1, 2k+1) + C(n+k, 2k+1). T_0(n) = 2n + 1.
Polynomial basis_T(unsigned k);
/// T_k(n) = (2n+1)/(2k+1) C(n+k, 2k).
Polynomial basis_T_product(unsigned k);
/// U_k(n) = (n/k) C(n+k-1, 2k-1), k >= 1.
Polynomial basis_U(unsigned k);
/// U_k(n) = C(n+k, 2k) + C(n+k-1, 2k), k >= 1.
Polynomial basis_U_sum(unsigned k);

/// C(n + k + shift, 2k + shift) in n.
Polynomial central_binomial(unsigned k, unsigned shift = 0);

/// (2k-1)! T(2m, 2k) for k = 1..m: the coefficients of C(n+k, 2k) in sum n^(2m-1).
std::vector<Integer> odd_powersum_cf(unsigned m);

/// Coefficients of T_1..T_m in sum n^(2m), found by expanding n^(2m) over U_k.
std::vector<Rational> even_powersum_cf(unsigned m);

/// sum_k c_k C(n+k-1+r, 2k-1+r) with c = odd_powersum_cf(m), which is sum^r n^(2m-1).
Polynomial odd_powersum_cf_polynomial(unsigned m, unsigned r = 1);

/// sum_k c_k T_k(n).
Polynomial even_powersum_cf_polynomial(std::span<const Rational> c);

/// From sum n^(2m)/(2n+1) = sum_k a_k C(n+k, 2k) to the coefficients
/// ((2k+1)/k) a_k of C(n+k, 2k) in sum n^(2m-1).
std::vector<Rational> even_odd_cf_dual(std::span<const Rational> a);
/// Inverse of even_odd_cf_dual.
std::vector<Rational> odd_even_cf_dual(std::span<const Rational> odd);

/// Stirling subset numbers {m k}, with {m 0} = [m = 0].
Integer stirling2(unsigned m, unsigned k);

struct StirlingExpansion {
    /// k! {m k} for k = 1..m: coefficients of C(n+1, k+1).
    std::vector<Integer> rising;
    /// (-1)^(m-k) k! {m k}: coefficients of C(n+k, k+1).
    std::vector<Integer> alternating;
};

StirlingExpansion stirling_expansion(unsigned m);
Polynomial stirling_rising_polynomial(const StirlingExpansion& e);
Polynomial stirling_alternating_polynomial(const StirlingExpansion& e);

/// sum_k T(2m, 2k) x^(2k), read off cosh(2x sinh(y/2)) at y^(2m)/(2m)!.
Polynomial gf_central_coefficient(unsigned m);

/// Compares the generating function with the table for m <= M.
bool gf_check_central(unsigned M);

} // namespace faulhaber
