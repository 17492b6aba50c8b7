#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faulhaber/exactnum.hpp"

namespace faulhaber {

/// Which indeterminate a polynomial is written in.
///   n  summation index
///   N  (n^2 + r n)/2
///   u  n^2 + n
///   w  parameter of the Faulhaber coefficients
///   x  generic argument (Bernoulli polynomials, tabulated functions)
enum class Var { n, N, u, w, x };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

class VariableMismatch : public std::invalid_argument {
public:
    VariableMismatch(Var a, Var b);
};

/// Dense univariate polynomial over Rational. Coefficients are stored by
/// ascending degree with no trailing zeros; the zero polynomial is empty.
class Polynomial {
public:
    explicit Polynomial(Var v = Var::n) : var_(v) {}
    Polynomial(Var v, std::vector<Rational> coeffs);

    static Polynomial constant(Var v, const Rational& c);
    static Polynomial monomial(Var v, const Rational& c, std::size_t degree);
    /// The polynomial x + c in variable v.
    static Polynomial linear(Var v, const Rational& c = Rational(0));

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& at) const;

    /// Same coefficients, different variable tag.
    Polynomial retag(Var v) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial& operator/=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    void require_same_var(const Polynomial& o) const;

    Var var_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::string to_string(const Polynomial& p);

Polynomial pow(const Polynomial& p, unsigned e);

/// outer(inner): substitutes inner for the variable of outer. The result is
/// written in inner's variable.
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

/// p(x + a).
Polynomial shift(const Polynomial& p, const Rational& a);

Polynomial derivative(const Polynomial& p);

/// Euclidean division; throws DomainError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// a / b, which must leave no remainder (DomainError otherwise).
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// C(upper, k) as a polynomial: upper(upper-1)...(upper-k+1)/k!.
Polynomial binomial_poly(const Polynomial& upper, unsigned k);

/// Backward difference p(n) - p(n-1).
Polynomial nabla(const Polynomial& p);

/// The q with nabla(q) = p and q(0) = 0, so q(n) = p(1) + ... + p(n).
Polynomial antidifference(const Polynomial& p);

/// Replaces N by N_r = (n^2 + r n)/2 in a polynomial in N.
Polynomial substitute_faulhaber(const Polynomial& p, unsigned r);

/// Writes q(n) = h(n(n + r)) and returns h (tagged `result_var`). Throws
/// DomainError if q is not a polynomial in n(n + r).
Polynomial in_reflective_variable(const Polynomial& q, const Rational& r, Var result_var);

/// Coefficients c_i with p = sum_i c_i basis[i]. The basis degrees must be
/// distinct; throws DomainError when p is not in their span.
std::vector<Rational> expand_in_basis(const Polynomial& p, std::span<const Polynomial> basis);

} // namespace faulhaber
