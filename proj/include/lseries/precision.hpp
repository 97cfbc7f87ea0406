#pragma once

#include <mpfr.h>

namespace lseries {

// Binary precision used for every Real/Complex temporary created on this
// thread. Public entry points install it from an explicit PrecisionContext
// via PrecisionGuard; nothing else mutates it.
mpfr_prec_t working_precision() noexcept;
void set_working_precision(mpfr_prec_t bits) noexcept;

class PrecisionGuard {
public:
    explicit PrecisionGuard(mpfr_prec_t bits)
        : saved_(working_precision()) { set_working_precision(bits); }
    ~PrecisionGuard() { set_working_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    mpfr_prec_t saved_;
};

// Caller-facing precision request: `bits` of binary working precision backing
// `target_digits` certified decimal digits plus `guard_digits` of slack.
// Immutable; operations never modify it.
struct PrecisionContext {
    long bits;
    long target_digits;
    long guard_digits;

    PrecisionContext(long bits_, long target_digits_, long guard_digits_ = 10);

    // Smallest admissible context for the requested digit count.
    static PrecisionContext digits(long target, long guard = 10);

    long working_bits() const { return bits + 32; }
};

} // namespace lseries
