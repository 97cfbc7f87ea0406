#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "lseries/precision.hpp"

namespace lseries {

// Arbitrary-precision real backed by MPFR. Every value is created at the
// thread's working precision; results of binary operations likewise.
class Real {
public:
    Real() { mpfr_init2(v_, working_precision()); mpfr_set_zero(v_, 1); }
    explicit Real(long n) { mpfr_init2(v_, working_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }
    explicit Real(int n) : Real(static_cast<long>(n)) {}
    explicit Real(double d) { mpfr_init2(v_, working_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit Real(const mpq_class& q) {
        mpfr_init2(v_, working_precision());
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    explicit Real(const mpz_class& z) {
        mpfr_init2(v_, working_precision());
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
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
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real parse(const std::string& s);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // exponent e with |x| in [2^(e-1), 2^e); 0 for zero
    long exp2() const { return is_zero() ? mpfr_get_emin() : mpfr_get_exp(v_); }

    std::string str(long digits = 0) const;

    Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

private:
    mpfr_t v_;
};

#define LSERIES_REAL_BINOP(op, fn)                                          \
    inline Real operator op(const Real& a, const Real& b) {                \
        Real r; fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;        \
    }                                                                       \
    inline Real operator op(const Real& a, long b) {                       \
        Real r; fn##_si(r.raw(), a.raw(), b, MPFR_RNDN); return r;         \
    }

LSERIES_REAL_BINOP(+, mpfr_add)
LSERIES_REAL_BINOP(-, mpfr_sub)
LSERIES_REAL_BINOP(*, mpfr_mul)
LSERIES_REAL_BINOP(/, mpfr_div)
#undef LSERIES_REAL_BINOP

inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
inline Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

inline Real& operator+=(Real& a, const Real& b) { mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator-=(Real& a, const Real& b) { mpfr_sub(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator*=(Real& a, const Real& b) { mpfr_mul(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }
inline Real& operator/=(Real& a, const Real& b) { mpfr_div(a.raw(), a.raw(), b.raw(), MPFR_RNDN); return a; }

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

#define LSERIES_REAL_FN1(name, fn)                                          \
    inline Real name(const Real& a) {                                      \
        Real r; fn(r.raw(), a.raw(), MPFR_RNDN); return r;                 \
    }

LSERIES_REAL_FN1(abs, mpfr_abs)
LSERIES_REAL_FN1(sqrt, mpfr_sqrt)
LSERIES_REAL_FN1(exp, mpfr_exp)
LSERIES_REAL_FN1(expm1, mpfr_expm1)
LSERIES_REAL_FN1(log, mpfr_log)
LSERIES_REAL_FN1(log1p, mpfr_log1p)
LSERIES_REAL_FN1(sin, mpfr_sin)
LSERIES_REAL_FN1(cos, mpfr_cos)
LSERIES_REAL_FN1(tan, mpfr_tan)
LSERIES_REAL_FN1(atan, mpfr_atan)
LSERIES_REAL_FN1(sinh, mpfr_sinh)
LSERIES_REAL_FN1(cosh, mpfr_cosh)
LSERIES_REAL_FN1(tanh, mpfr_tanh)
LSERIES_REAL_FN1(gamma_real, mpfr_gamma)
LSERIES_REAL_FN1(lngamma_real, mpfr_lngamma)
LSERIES_REAL_FN1(digamma_real, mpfr_digamma)
#undef LSERIES_REAL_FN1

inline Real floor(const Real& a) { Real r; mpfr_rint(r.raw(), a.raw(), MPFR_RNDD); return r; }
inline Real ceil(const Real& a) { Real r; mpfr_rint(r.raw(), a.raw(), MPFR_RNDU); return r; }
inline Real round(const Real& a) { Real r; mpfr_rint(r.raw(), a.raw(), MPFR_RNDNA); return r; }

inline Real atan2(const Real& y, const Real& x) {
    Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r; mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r; mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& a, long b) {
    Real r; mpfr_pow_si(r.raw(), a.raw(), b, MPFR_RNDN); return r;
}
inline Real ldexp2(const Real& a, long k) {
    Real r; mpfr_mul_2si(r.raw(), a.raw(), k, MPFR_RNDN); return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real const_pi();
Real const_euler();
Real const_catalan();
Real const_log2();

// 2^-(working precision - slack): generic "numerically zero" scale
Real precision_floor(long slack_bits = 0);

} // namespace lseries
