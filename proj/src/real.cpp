#include "lseries/real.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "lseries/errors.hpp"

namespace lseries {

namespace {
thread_local mpfr_prec_t g_working_prec = 192;
}

mpfr_prec_t working_precision() noexcept { return g_working_prec; }
void set_working_precision(mpfr_prec_t bits) noexcept {
    g_working_prec = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

PrecisionContext::PrecisionContext(long bits_, long target_digits_, long guard_digits_)
    : bits(bits_), target_digits(target_digits_), guard_digits(guard_digits_) {
    if (bits <= 0 || target_digits <= 0 || guard_digits < 0)
        throw DomainError("PrecisionContext: non-positive field");
    const double need = std::ceil((target_digits + guard_digits) * std::log2(10.0));
    if (bits < static_cast<long>(need))
        throw DomainError("PrecisionContext: bits too small for target+guard digits");
}

PrecisionContext PrecisionContext::digits(long target, long guard) {
    const long bits = static_cast<long>(std::ceil((target + guard) * std::log2(10.0)));
    return PrecisionContext(bits, target, guard);
}

Real Real::parse(const std::string& s) {
    Real r;
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("Real::parse: bad numeral '" + s + "'");
    return r;
}

std::string Real::str(long digits) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    if (digits <= 0)
        digits = static_cast<long>(mpfr_get_prec(v_) * 0.30103) + 1;
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!mant.empty() && mant[0] == '-') {
        sign_part = "-";
        mant.erase(0, 1);
    }
    // d.ddddEe with e such that value = 0.mant * 10^e
    std::string out = sign_part + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    long e10 = static_cast<long>(e) - 1;
    if (e10 != 0) out += "e" + std::to_string(e10);
    return out;
}

Real const_pi() { Real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
Real const_euler() { Real r; mpfr_const_euler(r.raw(), MPFR_RNDN); return r; }
Real const_catalan() { Real r; mpfr_const_catalan(r.raw(), MPFR_RNDN); return r; }
Real const_log2() { Real r; mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }

Real precision_floor(long slack_bits) {
    Real r(1L);
    mpfr_mul_2si(r.raw(), r.raw(), -(working_precision() - slack_bits), MPFR_RNDN);
    return r;
}

} // namespace lseries
