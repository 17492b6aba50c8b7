#pragma once

#include <optional>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// A_0^(w) .. A_kmax^(w) for a fixed rational w.
struct CoefficientTable {
    Rational w;
    std::vector<Rational> entries;
};

/// Raised when recurrence (w - k) A_k = ... hits w = k.
class PivotZeroError : public DomainError {
public:
    PivotZeroError(const Rational& w, unsigned k);
    Rational w;
    unsigned k;
};

class InstanceTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

enum class SpecialValues {
    fill,   // at integer w = k use A_k^(k) = B_2k
    reject, // throw PivotZeroError
};

/// Solves sum_{j<=k} C(w-j, 2k+1-2j) A_j = 0 (k > 0), A_0 = 1.
CoefficientTable a_by_recurrence(const Rational& w, unsigned kmax,
                                 SpecialValues special = SpecialValues::fill);

/// A_k^(w) as a polynomial in w (degree 2k).
Polynomial a_symbolic(unsigned k);
/// A_0 .. A_kmax as polynomials in w.
std::vector<Polynomial> a_symbolic_table(unsigned kmax);

/// Steps up from w - floor(w) with
/// (2w-2k)(2w-2k-1) A_k^(w) + (w-k+1)(w-k) A_{k-1}^(w) = 2w(2w-1) A_k^(w-1).
/// Requires w >= 0.
CoefficientTable a_by_jacobi(const Rational& w, unsigned kmax);

/// Closed formula in Bernoulli numbers for integer w = m; requires 0 <= k < m.
Rational a_explicit(unsigned m, unsigned k);

/// The k x k determinant D(w, k); D(w, 0) = 1.
Rational faulhaber_determinant(const Rational& w, unsigned k);

struct DeterminantResult {
    Rational D;
    /// D / ((1-w)...(k-w)); empty when w is one of 1..k.
    std::optional<Rational> A;
};

DeterminantResult a_by_determinant(const Rational& w, unsigned k);

/// Counts fillings of the k-rowed triple staircase with entries bounded by
/// w - k + j in row j. Requires w > k >= 1. Throws InstanceTooLarge once the
/// search visits more than `node_cap` nodes.
Integer staircase_count(unsigned w, unsigned k, unsigned long node_cap = 10'000'000);

/// sum_k A_k^(m) u^(m-k) with u = n^2 + n equals B_2m(n + 1).
bool closed_form_check(unsigned m);

/// Expands (z/2) cosh(sqrt(1+4u) z/2) / sinh(z/2) through z^(2M) and compares
/// the coefficients of z^(2m)/(2m)! with sum_k A_k^(m) u^(m-k).
bool gf_check_faulhaber(unsigned M);

/// The generating-function coefficient for a single m, as a polynomial in u.
Polynomial gf_faulhaber_coefficient(unsigned m);

} // namespace faulhaber
