#pragma once

/**
 * @file bigfloat.hpp
 * @brief Arbitrary-precision binary floats on MPFR, with explicit (not
 * ambient) precision. Used only where exact arithmetic cannot reach:
 * sums of distinct square roots in the recurrence-coefficient pipeline
 * and the ladder-operator cross-check oracle.
 */

#include <mpfr.h>

#include <string>
#include <utility>

#include "mvop/scalars.hpp"

namespace mvop {

class BigFloat {
    mpfr_t v_;
    mpfr_prec_t prec_;

public:
    static constexpr mpfr_prec_t default_precision = 256;

    explicit BigFloat(mpfr_prec_t prec = default_precision) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long n, mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    BigFloat(Rat const& r, mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(BigFloat const& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat const& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec_);
            prec_ = o.prec_;
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        std::swap(prec_, o.prec_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision_bits() const { return prec_; }

    static BigFloat sqrt_of(Rat const& r, mpfr_prec_t prec) {
        BigFloat x(r, prec);
        mpfr_sqrt(x.v_, x.v_, MPFR_RNDN);
        return x;
    }
    static BigFloat of(SqrtRat const& s, mpfr_prec_t prec) {
        BigFloat x = sqrt_of(s.radicand(), prec);
        if (s.sign() < 0) mpfr_neg(x.v_, x.v_, MPFR_RNDN);
        if (s.sign() == 0) mpfr_set_zero(x.v_, 1);
        return x;
    }

#define MVOP_BF_BINOP(op, fn)                                     \
    BigFloat operator op(BigFloat const& o) const {               \
        BigFloat r(prec_ > o.prec_ ? prec_ : o.prec_);            \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                            \
        return r;                                                 \
    }
    MVOP_BF_BINOP(+, mpfr_add)
    MVOP_BF_BINOP(-, mpfr_sub)
    MVOP_BF_BINOP(*, mpfr_mul)
    MVOP_BF_BINOP(/, mpfr_div)
#undef MVOP_BF_BINOP

    BigFloat operator-() const {
        BigFloat r(prec_);
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(BigFloat const& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(BigFloat const& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(BigFloat const& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat abs() const {
        BigFloat r(prec_);
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec_);
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    bool operator<(BigFloat const& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(BigFloat const& o) const { return mpfr_cmp(v_, o.v_) > 0; }

    /// |*this| < 2^-bits
    bool below_pow2(long bits) const {
        if (is_zero()) return true;
        return mpfr_get_exp(v_) < -bits + 1;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(size_t digits = 40) const {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool neg = !mant.empty() && mant[0] == '-';
        std::string digits_only = neg ? mant.substr(1) : mant;
        std::string out = (neg ? "-" : "") + ("0." + digits_only) + "e" + std::to_string(e);
        return out;
    }
};

}  // namespace mvop
