#pragma once

#include <mpfr.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace qasym {

// Arbitrary-precision binary float on top of MPFR. Every value carries its
// own mantissa width; binary operations produce results at the wider of the
// two operand precisions. Rounding is to nearest everywhere.
//
// There is deliberately no constructor from double: decimal inputs must go
// through from_decimal() so that values are parsed at full working precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long n, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_decimal(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("not a decimal number: '" + s + "'");
        return r;
    }
    // 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real euler_gamma(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    static Real nan(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_nan(r.v_);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr mp() const { return v_; }
    mpfr_ptr mp() { return v_; }

    // Rounds in place to a narrower (or wider) precision.
    Real& round_to(mpfr_prec_t prec) {
        mpfr_prec_round(v_, prec, MPFR_RNDN);
        return *this;
    }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific-notation decimal string with `digits` significant digits.
    std::string to_string(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend void swap(Real& a, Real& b) noexcept { mpfr_swap(a.v_, b.v_); }

#define QASYM_REAL_BINOP(op, fn)                                          \
    friend Real operator op(const Real& a, const Real& b) {               \
        Real r(std::max(a.prec(), b.prec()));                             \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
        return r;                                                         \
    }                                                                     \
    friend Real operator op(const Real& a, long b) {                      \
        Real r(a.prec());                                                 \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                                \
        return r;                                                         \
    }

    QASYM_REAL_BINOP(+, mpfr_add)
    QASYM_REAL_BINOP(-, mpfr_sub)
    QASYM_REAL_BINOP(*, mpfr_mul)
    QASYM_REAL_BINOP(/, mpfr_div)
#undef QASYM_REAL_BINOP

    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0 && !a.is_nan(); }
    friend bool operator!=(const Real& a, long b) { return !(a == b); }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

private:
    mpfr_t v_;
};

#define QASYM_REAL_FN1(name, fn)              \
    inline Real name(const Real& a) {         \
        Real r(a.prec());                     \
        fn(r.mp(), a.mp(), MPFR_RNDN);        \
        return r;                             \
    }

QASYM_REAL_FN1(abs, mpfr_abs)
QASYM_REAL_FN1(sqrt, mpfr_sqrt)
QASYM_REAL_FN1(exp, mpfr_exp)
QASYM_REAL_FN1(log, mpfr_log)
QASYM_REAL_FN1(log1p, mpfr_log1p)
QASYM_REAL_FN1(expm1, mpfr_expm1)
QASYM_REAL_FN1(sin, mpfr_sin)
QASYM_REAL_FN1(cos, mpfr_cos)
QASYM_REAL_FN1(tan, mpfr_tan)
QASYM_REAL_FN1(cot, mpfr_cot)
QASYM_REAL_FN1(sinh, mpfr_sinh)
QASYM_REAL_FN1(cosh, mpfr_cosh)
QASYM_REAL_FN1(tanh, mpfr_tanh)
QASYM_REAL_FN1(coth, mpfr_coth)
#undef QASYM_REAL_FN1

inline Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.mp(), a.mp());
    return r;
}
inline Real ceil(const Real& a) {
    Real r(a.prec());
    mpfr_ceil(r.mp(), a.mp());
    return r;
}

inline Real pow(const Real& b, const Real& e) {
    Real r(std::max(b.prec(), e.prec()));
    mpfr_pow(r.mp(), b.mp(), e.mp(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& b, long e) {
    Real r(b.prec());
    mpfr_pow_si(r.mp(), b.mp(), e, MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.mp(), a.mp(), b.mp(), MPFR_RNDN);
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.mp(), y.mp(), x.mp(), MPFR_RNDN);
    return r;
}
inline Real gamma_mpfr(const Real& x) {
    Real r(x.prec());
    mpfr_gamma(r.mp(), x.mp(), MPFR_RNDN);
    return r;
}
inline Real lgamma_mpfr(const Real& x) {
    Real r(x.prec());
    int sign = 0;
    mpfr_lgamma(r.mp(), &sign, x.mp(), MPFR_RNDN);
    return r;
}
inline Real digamma_mpfr(const Real& x) {
    Real r(x.prec());
    mpfr_digamma(r.mp(), x.mp(), MPFR_RNDN);
    return r;
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

}  // namespace qasym
