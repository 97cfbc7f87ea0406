#include "lseries/numerics.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace lseries::numerics {

// ---- Bernoulli -------------------------------------------------------------

namespace {
std::mutex g_bern_mutex;
std::vector<mpq_class> g_bern;  // grows monotonically; index k holds B_k

void extend_bernoulli(unsigned k) {
    // recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0, B_0 = 1
    if (g_bern.empty()) {
        g_bern.emplace_back(1);
        g_bern.emplace_back(mpq_class(-1, 2));
    }
    while (g_bern.size() <= k) {
        const unsigned n = static_cast<unsigned>(g_bern.size());  // computing B_n
        if (n % 2 == 1) {
            g_bern.emplace_back(0);
            continue;
        }
        mpq_class acc(0);
        mpz_class binom(1);  // C(n+1, j)
        for (unsigned j = 0; j < n; ++j) {
            acc += binom * g_bern[j];
            binom *= (n + 1 - j);
            binom /= (j + 1);
        }
        // binom now C(n+1, n) = n+1
        mpq_class b = -acc / mpq_class(n + 1);
        b.canonicalize();
        g_bern.push_back(b);
    }
}
}  // namespace

mpq_class bernoulli_number(unsigned k) {
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    extend_bernoulli(k);
    return g_bern[k];
}

mpq_class bernoulli_polynomial_exact(unsigned k, const mpq_class& x) {
    // B_k(x) = sum_j C(k,j) B_j x^{k-j}
    mpq_class acc(0);
    mpz_class binom(1);
    mpq_class xpow(1);
    // iterate j from k down to 0 so x powers build up; easier: j ascending with x^{k-j}
    std::vector<mpq_class> xp(k + 1);
    xp[0] = 1;
    for (unsigned i = 1; i <= k; ++i) xp[i] = xp[i - 1] * x;
    for (unsigned j = 0; j <= k; ++j) {
        acc += bernoulli_number(j) * binom * xp[k - j];
        binom *= (k - j);
        binom /= (j + 1);
    }
    acc.canonicalize();
    return acc;
}

Real bernoulli_polynomial(unsigned k, const Real& x, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Real acc;
    mpz_class binom(1);
    std::vector<Real> xp(k + 1);
    xp[0] = Real(1L);
    for (unsigned i = 1; i <= k; ++i) xp[i] = xp[i - 1] * x;
    for (unsigned j = 0; j <= k; ++j) {
        acc += Real(mpq_class(bernoulli_number(j) * binom)) * xp[k - j];
        binom *= (k - j);
        binom /= (j + 1);
    }
    return acc;
}

// ---- Hurwitz zeta ----------------------------------------------------------

namespace {

// (e^w - 1)/w and its derivative, stable near w = 0
Complex phi_e(const Complex& w) {
    if (exp2_mag(w) < -8) {
        Complex acc(1L), term(1L);
        const Real fl = precision_floor(4);
        for (long k = 2; k < 100000; ++k) {
            term = term * w / Real(k);
            acc += term;
            if (abs(term) < fl) break;
        }
        return acc;
    }
    return (exp(w) - 1L) / w;
}

Complex phi_e_prime(const Complex& w) {  // d/dw (e^w-1)/w = (e^w (w-1) + 1)/w^2
    if (exp2_mag(w) < -8) {
        // 1/2 + w/3 + w^2/8 + ... = sum_{k>=0} w^k (k+1)/(k+2)!
        Complex acc(Real(0.5)), term(Real(0.5)), wp(1L);
        const Real fl = precision_floor(4);
        for (long k = 1; k < 100000; ++k) {
            wp = wp * w;
            term = wp * Real(k + 1);
            mpz_class f(1);
            for (long j = 2; j <= k + 2; ++j) f *= j;
            term = term / Real(f);
            acc += term;
            if (abs(term) < fl) break;
        }
        return acc;
    }
    return (exp(w) * (w - 1L) + 1L) / (w * w);
}

// Euler-Maclaurin core; returns {value, d/ds value} (derivative only if want_ds).
// minus_pole: computes zeta(s,a) - 1/(s-1), analytic at s = 1.
std::pair<Complex, Complex> hurwitz_em(const Complex& s, const Real& a, bool want_ds,
                                       bool minus_pole = false) {
    if (!minus_pole && s.im.is_zero() && s.re == 1L)
        throw PoleError("hurwitz_zeta: pole at s = 1");
    if (a.sign() <= 0) throw DomainError("hurwitz_zeta: a must be positive");

    const mpfr_prec_t wp0 = working_precision();
    const long N = std::max<long>(8, static_cast<long>(0.35 * wp0) +
                                         static_cast<long>(0.5 * std::abs(s.im.to_double())));
    // the direct sum grows like N^{-Re s}; absorb its cancellation against the
    // continuation by elevating the working precision
    long extra = 0;
    double res = s.re.to_double();
    if (res < 0) extra = static_cast<long>(-res * std::log2(static_cast<double>(N) + 2) + 16);
    PrecisionGuard guard(wp0 + extra);
    const mpfr_prec_t wp = working_precision();

    Complex sum, dsum;
    for (long n = 0; n < N; ++n) {
        Real base = a + n;
        Real lb = log(base);
        Complex p = exp(Complex(-s.re * lb, -s.im * lb));
        sum += p;
        if (want_ds) dsum -= p * lb;
    }
    Real x = a + N;
    Real lx = log(x);
    Complex xms = exp(Complex(-s.re * lx, -s.im * lx));  // x^{-s}
    Complex sm1 = s - 1L;
    if (minus_pole) {
        // (x^{1-s} - 1)/(s-1) = -lx * E(w), w = (1-s) lx, E = (e^w-1)/w
        Complex w = (Complex(1L) - s) * lx;
        Complex E = phi_e(w);
        sum += -(lx)*E;
        if (want_ds) dsum += lx * lx * phi_e_prime(w);
    } else {
        Complex t = xms * x / sm1;  // x^{1-s}/(s-1)
        sum += t;
        if (want_ds) dsum += t * (-lx - Complex(1L) / sm1);
    }
    Complex t2 = xms * Real(0.5);
    sum += t2;
    if (want_ds) dsum -= t2 * lx;

    // correction sum: B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
    Complex poch = s;            // (s)_1
    Complex dpoch(1L);           // d/ds (s)_1
    Complex xpow = xms / x;      // x^{-s-1}
    Real x2 = x * x;
    Real floor_abs = ldexp2(abs(sum) + Real(1L), -(static_cast<long>(wp0) + 8));
    const long jmax = static_cast<long>(3.15 * (N + 2)) + 4;
    bool converged = false;
    for (long j = 1; j <= jmax; ++j) {
        mpq_class coeff = bernoulli_number(static_cast<unsigned>(2 * j));
        coeff /= mpz_class(2 * j) * mpz_class(2 * j - 1);
        // coeff is now B_{2j}/((2j)(2j-1)); fold remaining factorial into poch
        // by keeping poch = (s)_{2j-1}/(2j-2)!
        Complex term = Real(coeff) * poch * xpow;
        sum += term;
        Real mag = abs(term);
        Real dmag(0L);
        if (want_ds) {
            Complex dterm = Real(coeff) * (dpoch * xpow - poch * xpow * lx);
            dsum += dterm;
            dmag = abs(dterm);
        }
        if (mag < floor_abs && dmag < floor_abs * (Real(1L) + abs(lx))) {
            converged = true;
            break;
        }
        Complex f1 = (s + (2 * j - 1)) / Real(2 * j - 1);
        Complex f2 = (s + (2 * j)) / Real(2 * j);
        if (want_ds)
            dpoch = dpoch * f1 * f2 +
                    poch * (f1 / Real(2 * j) + f2 / Real(2 * j - 1)) ;
        poch = poch * f1 * f2;
        xpow = xpow / x2;
    }
    if (!converged)
        throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin correction did not converge");
    return {sum, dsum};
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return hurwitz_em(s, a, false).first;
}

std::pair<Complex, Complex> hurwitz_zeta_with_ds(const Complex& s, const Real& a,
                                                 const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return hurwitz_em(s, a, true);
}

Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return hurwitz_em(s, Real(1L), false).first;
}

Complex hurwitz_zeta_minus_pole(const Complex& s, const Real& a, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return hurwitz_em(s, a, false, true).first;
}

std::pair<Complex, Complex> hurwitz_zeta_minus_pole_with_ds(const Complex& s, const Real& a,
                                                            const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return hurwitz_em(s, a, true, true);
}

// ---- gamma family ----------------------------------------------------------

namespace {

bool near_integer(const Real& x, long& n, long slack_bits = 24) {
    Real r = round(x);
    if (abs(x - r) < precision_floor(slack_bits) * (Real(1L) + abs(x))) {
        n = r.to_long();
        return true;
    }
    return false;
}

bool is_nonpositive_int(const Complex& z, long& n) {
    if (!z.im.is_zero()) return false;
    long m;
    if (!z.re.is_integer()) return false;
    m = z.re.to_long();
    if (m > 0) return false;
    n = m;
    return true;
}

// log(sin(pi z)) on the branch that keeps log Gamma continuous off (-inf,0]
Complex log_sin_pi(const Complex& z) {
    Real pi = const_pi();
    if (z.im.is_zero()) {
        Real sp = sin(pi * z.re);
        if (sp.is_zero()) throw PoleError("log_sin_pi: integer argument");
        if (sp.sign() > 0) return Complex(log(sp));
        return Complex(log(-sp), pi);
    }
    Complex I = i_unit();
    if (z.im.sign() > 0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); |e^{2 i pi z}| < 1 here
        Complex w = exp(Complex(-2L * pi * z.im, 2L * pi * z.re));
        return Complex(-log(Real(2L)), pi / 2L) - I * (pi * z) + log(Complex(1L) - w);
    }
    Complex c = log_sin_pi(z.conj());
    return c.conj();
}

// Stirling for Re(w) large enough
Complex stirling_lgamma(const Complex& w) {
    Complex lw = log(w);
    Complex acc = (w - Real(0.5)) * lw - w + Real(0.5) * log(Real(2L) * const_pi());
    Complex w2 = w * w;
    Complex wpow = w;  // w^{2j-1}
    const Real floor_abs = precision_floor(8);
    for (long j = 1; j < 10000; ++j) {
        mpq_class c = bernoulli_number(static_cast<unsigned>(2 * j)) /
                      mpq_class(mpz_class(2 * j) * mpz_class(2 * j - 1));
        Complex term = Real(c) / wpow;
        acc += term;
        if (abs(term) < floor_abs * (abs(acc) + Real(1L))) break;
        wpow = wpow * w2;
    }
    return acc;
}

Complex lgamma_impl(const Complex& z) {
    long n;
    if (is_nonpositive_int(z, n)) throw PoleError("log_gamma: pole at non-positive integer");
    if (z.im.is_zero() && z.re.sign() > 0) return Complex(lngamma_real(z.re));
    if (z.re < Real(0.5)) {
        // reflection, continuous branch
        Real pi = const_pi();
        return Complex(log(pi)) - log_sin_pi(z) - lgamma_impl(Complex(1L) - z);
    }
    const mpfr_prec_t wp = working_precision();
    const double R = std::max(12.0, wp * 0.1104 + 4.0);  // ln2/(2 pi) ~ 0.1103
    Complex w = z;
    Complex shift;
    long guard = 0;
    while (abs(w).to_double() < R && guard++ < 100000) {
        shift += log(w);
        w = w + 1L;
    }
    return stirling_lgamma(w) - shift;
}

Complex digamma_impl(const Complex& z) {
    long n;
    if (is_nonpositive_int(z, n)) throw PoleError("digamma: pole at non-positive integer");
    if (z.im.is_zero() && z.re.sign() > 0) return Complex(digamma_real(z.re));
    Real pi = const_pi();
    if (z.re < Real(0.5))
        return digamma_impl(Complex(1L) - z) - pi * cot(pi * z);
    const mpfr_prec_t wp = working_precision();
    const double R = std::max(12.0, wp * 0.1104 + 4.0);
    Complex w = z;
    Complex shift;
    long guard = 0;
    while (abs(w).to_double() < R && guard++ < 100000) {
        shift += Complex(1L) / w;
        w = w + 1L;
    }
    Complex w2 = w * w;
    Complex acc = log(w) - Complex(1L) / (Real(2L) * w);
    Complex wpow = w2;  // w^{2j}
    const Real floor_abs = precision_floor(8);
    for (long j = 1; j < 10000; ++j) {
        mpq_class c = bernoulli_number(static_cast<unsigned>(2 * j)) / mpq_class(2 * j);
        Complex term = Real(c) / wpow;
        acc -= term;
        if (abs(term) < floor_abs * (abs(acc) + Real(1L))) break;
        wpow = wpow * w2;
    }
    return acc - shift;
}

}  // namespace

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return lgamma_impl(z);
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    long n;
    if (is_nonpositive_int(z, n)) throw PoleError("gamma: pole at non-positive integer");
    if (z.im.is_zero()) return Complex(gamma_real(z.re));
    return exp(lgamma_impl(z));
}

Complex rgamma(const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    long n;
    if (is_nonpositive_int(z, n)) return Complex(0L);
    if (z.im.is_zero()) return Complex(Real(1L) / gamma_real(z.re));
    return exp(-lgamma_impl(z));
}

Complex digamma(const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    return digamma_impl(z);
}

Real polygamma(unsigned n, const Real& x, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    if (n == 0) return digamma_real(x);
    if (x.sign() <= 0) throw DomainError("polygamma: x must be positive");
    // psi^{(n)}(x) = (-1)^{n+1} n! zeta(n+1, x)
    Complex z = hurwitz_em(Complex(static_cast<long>(n) + 1), x, false).first;
    Real fact(1L);
    for (unsigned j = 2; j <= n; ++j) fact *= Real(static_cast<long>(j));
    Real v = fact * z.re;
    return (n % 2 == 0) ? -v : v;
}

Complex gamma_like(GammaKind kind, const Complex& z, const PrecisionContext& ctx) {
    switch (kind) {
        case GammaKind::gamma: return gamma(z, ctx);
        case GammaKind::log_gamma: return log_gamma(z, ctx);
        default: return digamma(z, ctx);
    }
}

// ---- polylog ----------------------------------------------------------------

Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Real az = abs(z);
    if (!(az < Real(1L))) throw DomainError("polylog: |z| must be < 1");
    if (z.is_zero()) return Complex(0L);
    Complex acc;
    Complex zp(1L);
    const Real floor_rel = precision_floor(8);
    Real geom = Real(1L) / (Real(1L) - az);
    double res = -s.re.to_double();
    for (long n = 1; n < 100000000; ++n) {
        zp = zp * z;
        Complex term = zp * pow(Complex(Real(static_cast<long>(n))), -s);
        acc += term;
        // geometric tail bound: remaining <= |z|^{n+1} (n+1)^{-Re s} * C / (1-|z|)
        if (n > 2) {
            Real bound = pow(az, n + 1) * pow(Real(n + 1), Real(std::max(0.0, res) + 1.0)) * geom;
            if (bound < floor_rel * (abs(acc) + Real(1L))) break;
        }
    }
    return acc;
}

} // namespace lseries::numerics
