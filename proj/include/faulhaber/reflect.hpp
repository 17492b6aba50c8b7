#pragma once

#include <optional>
#include <span>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// f(x) = f(-x-r) as polynomials.
bool is_reflective(const Polynomial& f, long r);
/// f(x) = -f(-x-r) as polynomials.
bool is_anti_reflective(const Polynomial& f, long r);

/// The constant C that makes Sigma f + C anti-(r+1)-reflective.
struct SigmaConstant {
    bool any = false; // f anti-r-reflective: every C gives an (r+1)-reflective sum
    Rational value;
};

/// Throws DomainError unless f is r-reflective or anti-r-reflective.
SigmaConstant sigma_constant(const Polynomial& f, long r);

class WindowTooSmall : public DomainError {
public:
    using DomainError::DomainError;
};

/// A function on the integers, given either as a polynomial or as a table of
/// values on the window lo..hi.
class TabulatedFunction {
public:
    explicit TabulatedFunction(Polynomial p);
    TabulatedFunction(long lo, std::vector<Rational> values);

    bool is_polynomial() const { return poly_.has_value(); }
    const Polynomial& polynomial() const;
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(values_.size()) - 1; }
    const std::vector<Rational>& values() const { return values_; }

    bool covers(long x) const;
    /// Throws WindowTooSmall outside the window.
    Rational operator()(long x) const;

private:
    std::optional<Polynomial> poly_;
    long lo_ = 0;
    std::vector<Rational> values_;
};

struct Decomposition {
    TabulatedFunction g; // r-reflective
    TabulatedFunction h; // anti-s-reflective
    /// False when the anchor had to fix a free constant.
    bool unique = true;
};

/// f = g + h. Polynomials decompose uniquely for every r, s and the anchor is
/// not used. Tables are solved exactly on their window; when r is even and s
/// is odd the free constant is fixed by h(0) = anchor (default 0), which
/// needs 0 in the window. Throws WindowTooSmall when the window leaves the
/// decomposition undetermined.
Decomposition decompose(const TabulatedFunction& f, long r, long s,
                        std::optional<Rational> anchor = std::nullopt);

/// a_k = nabla^k f(floor(k/2)) for k = 0..kmax, so f(n) = sum_k a_k C(n + floor(k/2), k).
/// Needs the window -ceil(kmax/2)..floor(kmax/2).
std::vector<Rational> a_expansion(const TabulatedFunction& f, unsigned kmax);

/// f = b_0 T_0 + b_1 U_1 + b_2 T_1 + b_3 U_2 + ..., same window as a_expansion.
std::vector<Rational> b_expansion(const TabulatedFunction& f, unsigned kmax);

/// a_k = 2 b_(k-1) + (-1)^k b_k.
std::vector<Rational> a_from_b(std::span<const Rational> b);
/// b_k = sum_j (-1)^(ceil(j/2) + floor(k/2)) 2^(k-j) a_j.
std::vector<Rational> b_from_a(std::span<const Rational> a);

/// sum_k a_k C(n + floor(k/2), k) as a polynomial.
Polynomial a_series_polynomial(std::span<const Rational> a);
/// sum_k b_k (T or U basis) as a polynomial.
Polynomial b_series_polynomial(std::span<const Rational> b);

} // namespace faulhaber
