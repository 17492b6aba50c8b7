#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faulhaber/exactnum.hpp"
#include "faulhaber/polynomial.hpp"

namespace faulhaber {

/// p(n) = (sum_i numerators[i] n^i) / denominator with coprime integer
/// numerators and a positive denominator.
struct PrimitiveForm {
    std::vector<Integer> numerators;
    Integer denominator;
};

PrimitiveForm primitive_form(const Polynomial& p);

/// sum^9 n^8 = (a_17 n^17 + ... + a_1 n)/d.
PrimitiveForm sigma9_n8_coeffs();
/// sum n^25 = (A_26 n^26 + ... + A_1 n)/D.
PrimitiveForm sigma_n25();
/// (A_26, D).
std::pair<Integer, Integer> sigma_n25_leading();

struct ScaledCoefficients {
    Rational scale;
    /// (-1)^(deg-k) scale * coeff_k, each a multiple of 2^k.
    std::vector<Integer> values;
};

/// Smallest positive t with t * coeffs[k] an integer multiple of 2^k for
/// every k. Throws DomainError if all coefficients are zero.
ScaledCoefficients minimal_2k_scaling(std::span<const Rational> coeffs);

struct RiddleReport {
    PrimitiveForm a; // sum^9 n^8
    PrimitiveForm A; // sum n^25
    ScaledCoefficients b, c, d, e;
    Rational c_scale;
    std::array<Rational, 5> x;
    /// x_5 with A_26 a_11 / D in place of A_26 a_11 - D.
    std::optional<Rational> x5_alternate;
    /// Letter for each x that is an integer in 1..23.
    std::array<std::optional<char>, 5> letters;
    /// The decoded letters, '?' where x gave none.
    std::string decoded;
    /// decoded with an unreadable fifth letter completed as 'S'.
    std::string name;
    bool fifth_letter_inferred = false;
};

/// The 23-letter alphabet; x = 1 is 'A'. Empty unless x is an integer in range.
std::optional<char> riddle_letter(const Rational& x);

RiddleReport solve_riddle(const Rational& c_scale = Rational(Integer(1), Integer(4)),
                          bool alternate_x5 = false);

} // namespace faulhaber
