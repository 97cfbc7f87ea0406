#include "lseries/numerics.hpp"

namespace lseries::numerics {

namespace {

bool nonpositive_int(const Complex& z, long& n, long slack = 24) {
    if (!z.im.is_zero()) return false;
    Real r = round(z.re);
    if (abs(z.re - r) > precision_floor(slack) * (Real(1L) + abs(z.re))) return false;
    long m = r.to_long();
    if (m > 0) return false;
    n = m;
    return true;
}

bool close_to_int(const Complex& z, long slack = 24) {
    if (!z.im.is_zero()) {
        if (abs(z.im) > precision_floor(slack) * (Real(1L) + abs(z.re))) return false;
    }
    Real r = round(z.re);
    return abs(z.re - r) < precision_floor(slack) * (Real(1L) + abs(z.re));
}

// plain Gauss series; requires |z| < 1 with margin
Complex gauss_series(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                     long cpole_ok_below = -1) {
    Complex term(1L), acc(1L);
    const Real floor_rel = precision_floor(6);
    long n;
    if (nonpositive_int(Complex(c), n)) {
        // only valid when the series terminates before the c-pole
        long deg = -1;
        long na, nb;
        if (nonpositive_int(a, na)) deg = -na;
        if (nonpositive_int(b, nb)) deg = (deg < 0) ? -nb : std::min(deg, -nb);
        if (deg < 0 || deg > -n)
            throw PoleError("hyp2f1: c is a non-positive integer");
        (void)cpole_ok_below;
    }
    for (long k = 0; k < 1000000; ++k) {
        Complex ratio = (a + k) * (b + k) / ((c + k) * Real(static_cast<long>(k + 1)));
        term = term * ratio * z;
        if (term.is_zero()) break;  // terminating polynomial
        acc += term;
        if (k > 4 && abs(term) < floor_rel * (abs(acc) + Real(1L))) {
            // one safety term
            Complex t2 = term * (a + k + 1) * (b + k + 1) / ((c + k + 1) * Real(k + 2)) * z;
            acc += t2;
            return acc;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge");
}

Complex hyp_impl(Complex a, Complex b, Complex c, Complex z, int depth);

// Abramowitz-Stegun 15.3.6 (argument 1-z); requires c-a-b non-integer
Complex transform_1mz(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                      int depth) {
    PrecisionContext ctx(working_precision(), std::max<long>(1, working_precision() / 4), 0);
    Complex cab = c - a - b;
    Complex w = Complex(1L) - z;
    Complex t1 = gamma(c, ctx) * gamma(cab, ctx) * rgamma(c - a, ctx) * rgamma(c - b, ctx) *
                 hyp_impl(a, b, Complex(1L) - cab, w, depth + 1);
    Complex t2 = pow(w, cab) * gamma(c, ctx) * gamma(-cab, ctx) * rgamma(a, ctx) * rgamma(b, ctx) *
                 hyp_impl(c - a, c - b, cab + 1L, w, depth + 1);
    return t1 + t2;
}

// 15.3.7 (argument 1/z); requires a-b non-integer
Complex transform_inv(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                      int depth) {
    PrecisionContext ctx(working_precision(), std::max<long>(1, working_precision() / 4), 0);
    Complex w = Complex(1L) / z;
    Complex mz = -z;
    Complex t1 = gamma(c, ctx) * gamma(b - a, ctx) * rgamma(b, ctx) * rgamma(c - a, ctx) *
                 pow(mz, -a) * hyp_impl(a, Complex(1L) - c + a, Complex(1L) - b + a, w, depth + 1);
    Complex t2 = gamma(c, ctx) * gamma(a - b, ctx) * rgamma(a, ctx) * rgamma(c - b, ctx) *
                 pow(mz, -b) * hyp_impl(b, Complex(1L) - c + b, Complex(1L) - a + b, w, depth + 1);
    return t1 + t2;
}

// 15.3.8 (argument 1/(1-z)); requires a-b non-integer
Complex transform_inv1mz(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
                         int depth) {
    PrecisionContext ctx(working_precision(), std::max<long>(1, working_precision() / 4), 0);
    Complex omz = Complex(1L) - z;
    Complex w = Complex(1L) / omz;
    Complex t1 = pow(omz, -a) * gamma(c, ctx) * gamma(b - a, ctx) * rgamma(b, ctx) *
                 rgamma(c - a, ctx) * hyp_impl(a, c - b, a - b + 1L, w, depth + 1);
    Complex t2 = pow(omz, -b) * gamma(c, ctx) * gamma(a - b, ctx) * rgamma(a, ctx) *
                 rgamma(c - b, ctx) * hyp_impl(b, c - a, b - a + 1L, w, depth + 1);
    return t1 + t2;
}

Complex hyp_impl(Complex a, Complex b, Complex c, Complex z, int depth) {
    if (depth > 3) throw ConvergenceError("hyp2f1: transform recursion too deep");
    long n;
    if (z.is_zero() || (a.is_zero() && !nonpositive_int(c, n)) ||
        (b.is_zero() && !nonpositive_int(c, n)))
        return Complex(1L);
    // polynomial cases
    long na, nb;
    bool pa = nonpositive_int(a, na), pb = nonpositive_int(b, nb);
    if (pa || pb) return gauss_series(a, b, c, z);
    // elementary reductions
    if (close_to_int(c - b) && abs(c.re - b.re) < Real(0.5) && c.im == b.im)
        return pow(Complex(1L) - z, -a);
    if (close_to_int(c - a) && abs(c.re - a.re) < Real(0.5) && c.im == a.im)
        return pow(Complex(1L) - z, -b);

    Real az = abs(z);
    if (az < Real(0.8)) return gauss_series(a, b, c, z);

    // candidate transforms ranked by |argument|
    Real a_pf = abs(z / (z - 1L));
    Real a_1mz = abs(Complex(1L) - z);
    Real a_inv = Real(1L) / az;
    Real a_i1mz = Real(1L) / a_1mz;

    const bool ab_int = close_to_int(a - b);
    const bool cab_int = close_to_int(c - a - b);

    struct Cand { Real mag; int which; bool ok; };
    std::vector<Cand> cands = {
        {az, 0, true},
        {a_pf, 1, true},
        {a_1mz, 2, !cab_int},
        {a_inv, 3, !ab_int},
        {a_i1mz, 4, !ab_int},
    };
    int best = -1;
    for (size_t i = 0; i < cands.size(); ++i) {
        if (!cands[i].ok) continue;
        if (best < 0 || cands[i].mag < cands[best].mag) best = static_cast<int>(i);
    }
    if (best >= 0 && cands[best].mag < Real(0.9)) {
        switch (cands[best].which) {
            case 0: return gauss_series(a, b, c, z);
            case 1: return pow(Complex(1L) - z, -a) * hyp_impl(a, c - b, c, z / (z - 1L), depth + 1);
            case 2: return transform_1mz(a, b, c, z, depth);
            case 3: return transform_inv(a, b, c, z, depth);
            default: return transform_inv1mz(a, b, c, z, depth);
        }
    }
    // integer-degenerate difference blocking every good transform: averaged
    // parameter perturbation at elevated precision
    if ((ab_int || cab_int) &&
        (min(min(a_pf, a_1mz), min(a_inv, a_i1mz)) < Real(0.9))) {
        const mpfr_prec_t wp = working_precision();
        Real delta = ldexp2(Real(1L), -(static_cast<long>(wp) / 2 + 8));
        PrecisionGuard guard(wp + wp / 2 + 96);
        Complex ap = Complex(a.re + delta, a.im), am = Complex(a.re - delta, a.im);
        Complex up = hyp_impl(ap, b, c, z, depth + 1);
        Complex dn = hyp_impl(am, b, c, z, depth + 1);
        Complex avg = (up + dn) / 2L;
        return avg;
    }
    throw ConvergenceError("hyp2f1: argument in the hard neighborhood of exp(+-i pi/3)");
}

}  // namespace

Complex hyp2f1(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
               const PrecisionContext& ctx, CutSide side) {
    PrecisionGuard guard(ctx.working_bits());
    long n;
    Complex zz = z;
    if (z.im.is_zero() && z.re > Real(1L)) {
        bool poly = nonpositive_int(a, n) || nonpositive_int(b, n);
        bool reduces = close_to_int(c - b) || close_to_int(c - a);
        if (!poly && !reduces) {
            if (side == CutSide::none)
                throw BranchCutError("hyp2f1: z on the cut (1,inf); specify a side");
            Real eps = ldexp2(max(Real(1L), abs(z.re)), -(static_cast<long>(working_precision()) - 12));
            zz = Complex(z.re, side == CutSide::above ? eps : -eps);
        }
    }
    return hyp_impl(a, b, c, zz, 0);
}

Complex hyp2f1_regularized(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& z, const PrecisionContext& ctx, CutSide side) {
    PrecisionGuard guard(ctx.working_bits());
    long m;
    if (nonpositive_int(c, m)) {
        // 2F1~(a,b;-m;z) = (a)_{m+1}(b)_{m+1}/(m+1)! z^{m+1} 2F1(a+m+1,b+m+1;m+2;z)
        long mm = -m;
        Complex poch(1L);
        for (long j = 0; j <= mm; ++j) poch = poch * (a + j) * (b + j);
        Real fact(1L);
        for (long j = 2; j <= mm + 1; ++j) fact *= Real(j);
        return poch / fact * pow(z, mm + 1) *
               hyp2f1(a + (mm + 1), b + (mm + 1), Complex(static_cast<long>(mm + 2)), z, ctx, side);
    }
    return hyp2f1(a, b, c, z, ctx, side) * rgamma(c, ctx);
}

} // namespace lseries::numerics
