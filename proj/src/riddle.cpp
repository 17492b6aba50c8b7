#include "faulhaber/riddle.hpp"

#include <string_view>

#include "faulhaber/powersum.hpp"

namespace faulhaber {

namespace {

constexpr std::string_view alphabet = "ABCDEFGHIKLMNOPQRSTUXYZ";

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Coefficients of g(N) / N, i.e. sum n^m / sum n^3 for odd m >= 3.
std::vector<Rational> over_N(const Polynomial& g)
{
    if (!g.coeff(0).is_zero())
        throw DomainError("polynomial in N is not divisible by N");
    return {g.coeffs().begin() + 1, g.coeffs().end()};
}

} // namespace

PrimitiveForm primitive_form(const Polynomial& p)
{
    if (p.is_zero())
        throw DomainError("zero polynomial has no primitive form");
    Integer den = 1, num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero())
            continue;
        den = lcm(den, c.denominator());
        num_gcd = gcd(num_gcd, c.numerator());
    }
    Rational scale(den, num_gcd);
    if (p.leading().sign() < 0)
        scale = -scale;
    PrimitiveForm f;
    for (const auto& c : p.coeffs())
        f.numerators.push_back((c * scale).numerator());
    f.denominator = scale.numerator();
    if (scale.denominator() != 1) {
        // Fractional scale: clear its denominator on both sides.
        for (auto& x : f.numerators)
            x *= scale.denominator();
        f.denominator = scale.numerator() * scale.denominator();
    }
    if (f.denominator < 0) {
        for (auto& x : f.numerators)
            x = -x;
        f.denominator = -f.denominator;
    }
    return f;
}

PrimitiveForm sigma9_n8_coeffs() { return primitive_form(power_sum(8, 9)); }

PrimitiveForm sigma_n25() { return primitive_form(power_sum(25, 1)); }

std::pair<Integer, Integer> sigma_n25_leading()
{
    const PrimitiveForm f = sigma_n25();
    return {f.numerators.back(), f.denominator};
}

ScaledCoefficients minimal_2k_scaling(std::span<const Rational> coeffs)
{
    // t * c_k / 2^k must be an integer: t is a multiple of q_k / |p_k| for
    // c_k / 2^k = p_k / q_k, and the least common multiple of those rationals
    // is lcm(q_k) / gcd(p_k).
    Integer l = 1, g = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        const Rational r = coeffs[k] / pow(Rational(2), static_cast<long>(k));
        l = lcm(l, r.denominator());
        g = gcd(g, r.numerator());
    }
    if (g == 0)
        throw DomainError("cannot scale an all-zero coefficient list");
    ScaledCoefficients s;
    s.scale = Rational(l, g);
    const std::size_t deg = coeffs.size() - 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational v = coeffs[k] * s.scale;
        s.values.push_back((deg - k) % 2 == 0 ? v.numerator() : Integer(-v.numerator()));
    }
    return s;
}

std::optional<char> riddle_letter(const Rational& x)
{
    if (!x.is_integer() || x < Rational(1) || x > Rational(static_cast<long>(alphabet.size())))
        return std::nullopt;
    return alphabet[x.numerator().get_ui() - 1];
}

RiddleReport solve_riddle(const Rational& c_scale, bool alternate_x5)
{
    RiddleReport rep;
    rep.a = sigma9_n8_coeffs();
    rep.A = sigma_n25();
    rep.b = minimal_2k_scaling(to_faulhaber_form(22, 1).g.coeffs());
    rep.c = minimal_2k_scaling(over_N(to_faulhaber_form(23, 1).g));
    rep.d = minimal_2k_scaling(to_faulhaber_form(24, 1).g.coeffs());
    rep.e = minimal_2k_scaling(over_N(to_faulhaber_form(25, 1).g));
    rep.c_scale = c_scale;

    const auto a = [&](std::size_t i) { return Rational(rep.a.numerators.at(i)); };
    const auto b = [&](std::size_t k) { return Rational(rep.b.values.at(k)); };
    const auto c = [&](std::size_t k) { return Rational(rep.c.values.at(k)) * c_scale; };
    const Rational d11(rep.d.values.at(11)), e11(rep.e.values.at(11));
    const Rational A26(rep.A.numerators.at(26)), D(rep.A.denominator);

    rep.x[0] = (c(3) - a(12)) / Rational(7924252);
    rep.x[1] = (b(5) + a(10)) / Rational(112499648);
    rep.x[2] = (a(11) - b(9) - c(1)) / Rational(2945002);
    rep.x[3] = (a(14) + c(7)) / Rational(120964);
    rep.x[4] = (A26 * a(11) - D + a(13) + d11 + e11) / Rational(199444);
    if (alternate_x5)
        rep.x5_alternate = (A26 * a(11) / D + a(13) + d11 + e11) / Rational(199444);

    for (std::size_t i = 0; i < 5; ++i) {
        rep.letters[i] = riddle_letter(rep.x[i]);
        rep.decoded += rep.letters[i].value_or('?');
    }
    rep.name = rep.decoded;
    if (rep.decoded.substr(0, 4) == "IESU" && !rep.letters[4]) {
        rep.name[4] = 'S';
        rep.fifth_letter_inferred = true;
    }
    return rep;
}

} // namespace faulhaber
