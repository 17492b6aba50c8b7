#pragma once

#include <string>

#include <gmp.h>
#include <mpfr.h>

#include "faulhaber/exactnum.hpp"

namespace faulhaber::detail {

/// Owning MPFR value at a fixed precision, round to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(mpfr_prec_t bits, const Rational& r)
    {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat& operator=(const BigFloat& o)
    {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string to_string(int digits = 30) const
    {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

private:
    mpfr_t v_;
};

} // namespace faulhaber::detail
