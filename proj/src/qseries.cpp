#include "lseries/qseries.hpp"

#include <cmath>

#include "lseries/errors.hpp"
#include "lseries/lfunc.hpp"
#include "lseries/numerics.hpp"

namespace lseries::qseries {

QPoint QPoint::from_tau(const Complex& tau) {
    if (!(tau.im > Real(0L))) throw DomainError("QPoint: Im(tau) must be positive");
    QPoint z;
    z.tau = tau;
    z.y = Complex(tau.im, -tau.re);  // -i tau
    z.q = exp(Complex(-2L * const_pi() * tau.im, 2L * const_pi() * tau.re));
    return z;
}

QPoint QPoint::from_y(const Complex& y) {
    if (!(y.re > Real(0L))) throw DomainError("QPoint: Re(y) must be positive");
    return from_tau(Complex(-y.im, y.re));  // tau = i y
}

QPoint QPoint::dual(long N) const {
    Complex t = Complex(-1L) / (Real(N) * tau);
    return from_tau(t);
}

QPoint QPoint::scaled(long k) const { return from_tau(tau * Real(k)); }

Complex sigma_double(const Complex& s, const Character& chi1, const Character& chi2, long n,
                     const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("sigma_double: n >= 1");
    PrecisionGuard guard(ctx.working_bits());
    Complex acc;
    for (long d : chars::divisors(n)) {
        if (!chi1.is_unit(n / d) || !chi2.is_unit(d)) continue;
        acc += chi1.value(n / d) * chi2.value(d) * pow(Complex(Real(d)), s);
    }
    return acc;
}

mpz_class sigma_double_exact(long s, const Character& chi1, const Character& chi2, long n) {
    if (n < 1) throw DomainError("sigma_double_exact: n >= 1");
    if (s < 0) throw DomainError("sigma_double_exact: s >= 0");
    mpz_class acc(0);
    for (long d : chars::divisors(n)) {
        if (!chi1.is_unit(n / d) || !chi2.is_unit(d)) continue;
        int v = chi1.real_value(n / d) * chi2.real_value(d);
        if (v == 0) continue;
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(s));
        acc += v * dp;
    }
    return acc;
}

Complex sigma_single(SigmaKind kind, const Complex& s, const Character& chi, long n,
                     const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Complex acc;
    for (long d : chars::divisors(n)) {
        long carg = (kind == SigmaKind::twisted) ? n / d : d;
        if (!chi.is_unit(carg)) continue;
        acc += chi.value(carg) * pow(Complex(Real(d)), s);
    }
    return acc;
}

mpz_class sigma_single_exact(SigmaKind kind, long s, const Character& chi, long n) {
    mpz_class acc(0);
    for (long d : chars::divisors(n)) {
        long carg = (kind == SigmaKind::twisted) ? n / d : d;
        if (!chi.is_unit(carg)) continue;
        int v = chi.real_value(carg);
        if (v == 0) continue;
        mpz_class dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(s));
        acc += v * dp;
    }
    return acc;
}

namespace {

// truncation index: smallest N with |q|^N N^{g} below the relative floor
long series_cutoff(const Real& qabs, double grow, long wp) {
    if (!(qabs < Real(1L))) throw DomainError("series_cutoff: |q| >= 1");
    double lq = -log(qabs).to_double();
    if (lq < 1e-3) throw ConvergenceError("q-series too close to |q| = 1; use the transseries");
    double bits = static_cast<double>(wp) + 16;
    double N = bits * 0.6931 / lq + 4;
    // account for polynomial growth n^grow
    for (int it = 0; it < 30; ++it) N = (bits * 0.6931 + std::max(0.0, grow) * std::log(N)) / lq + 4;
    return static_cast<long>(N) + 2;
}

}  // namespace

Complex xi_direct(const SeriesParams& p, const QPoint& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Real qa = abs(z.q);
    const double grow = std::max(0.0, -p.s1.re.to_double()) + std::max(0.0, -p.s2.re.to_double());
    const long N = series_cutoff(qa, grow + 1, ctx.working_bits());
    Complex acc;
    for (long n1 = 1; n1 <= N; ++n1) {
        if (!p.chi1.is_unit(n1)) continue;
        Complex c1 = p.chi1.value(n1) * pow(Complex(Real(n1)), -p.s1);
        Complex qn1 = pow(z.q, n1);
        Complex qk = qn1;  // q^{n1 n2}
        Complex inner;
        for (long n2 = 1; n1 * n2 <= N; ++n2) {
            if (p.chi2.is_unit(n2))
                inner += p.chi2.value(n2) * pow(Complex(Real(n2)), -p.s2) * qk;
            qk = qk * qn1;
        }
        acc += c1 * inner;
    }
    return acc;
}

Complex phi0_closed(const Character& chi, const Complex& x) {
    const long r = chi.modulus();
    Complex num;
    Complex xp(1L);
    for (long a = 1; a <= r; ++a) {
        xp = xp * x;
        if (!chi.is_unit(a)) continue;
        num += chi.value(a) * xp;
    }
    Complex den = Complex(1L) - (r == 1 ? x : xp);
    if (abs(den) < precision_floor(16))
        throw DomainError("phi0_closed: denominator 1 - x^r vanishes");
    return num / den;
}

Complex phi(const Complex& s, const Character& chi, const QPoint& z,
            const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    if (s.is_zero()) return phi0_closed(chi, z.q);
    Real qa = abs(z.q);
    const long N = series_cutoff(qa, std::max(0.0, -s.re.to_double()), ctx.working_bits());
    Complex acc;
    Complex qk(1L);
    long below = 0;
    const Real fl = precision_floor(8);
    for (long n = 1; n <= N; ++n) {
        qk = qk * z.q;
        if (!chi.is_unit(n)) continue;
        Complex term = chi.value(n) * pow(Complex(Real(n)), -s) * qk;
        acc += term;
        // twisted signs can park individual terms near zero: require several
        // consecutive small terms before stopping early
        if (abs(term) < fl * (abs(acc) + Real(1L))) {
            if (++below >= 5) break;
        } else {
            below = 0;
        }
    }
    return acc;
}

Complex lambert(const Complex& s, const Character& chi1, const Character& chi2, const QPoint& z,
                const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Real qa = abs(z.q);
    const long N = series_cutoff(qa, std::max(0.0, -s.re.to_double()), ctx.working_bits());
    Complex acc;
    for (long n = 1; n <= N; ++n) {
        if (!chi1.is_unit(n)) continue;
        Complex qn = pow(z.q, n);
        acc += chi1.value(n) * pow(Complex(Real(n)), -s) * phi0_closed(chi2, qn);
    }
    return acc;
}

Complex lambert_tilde(const Complex& s, const Character& chi, const QPoint& z,
                      const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Real qa = abs(z.q);
    const long N = series_cutoff(qa, std::max(0.0, -s.re.to_double()) + 1, ctx.working_bits());
    Complex acc;
    for (long n = 1; n <= N; ++n) {
        if (!chi.is_unit(n)) continue;
        acc += chi.value(n) * numerics::polylog(s, pow(z.q, n), ctx);
    }
    return acc;
}

Complex eisenstein_constant(long m, const Character& chi1, const Character& chi2,
                            const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    if (chi1.is_trivial())
        return lfunc::l_value(chi2, Complex(1L - m), ctx) / 2L;
    if (chi2.is_trivial()) {
        if (m == 1) return lfunc::l_value(chi1, Complex(0L), ctx) / 2L;
        return Complex(0L);
    }
    return Complex(0L);
}

EisensteinCoeffs eisenstein_q_coeffs(long m, const Character& chi1, const Character& chi2,
                                     long N) {
    if (m < 1) throw DomainError("eisenstein_q_coeffs: m >= 1");
    EisensteinCoeffs out;
    // constant A_m: rational via the Bernoulli closed form
    if (chi1.is_trivial()) {
        auto [D, prim] = chars::conductor_and_primitivize(chi2);
        (void)D;
        if (m == 1 && prim.is_trivial())
            throw PoleError("eisenstein_q_coeffs: constant needs L(chi_{1,1},0) at a pole");
        out.constant = lfunc::l_negative_integer_exact(prim, static_cast<unsigned>(m - 1));
        if (!prim.is_primitive() || prim.modulus() != chi2.modulus()) {
            // imprimitive: L(chi,1-m) = L(chi_D,1-m) prod_{p | r, p coprime D}(1 - chi_D(p) p^{m-1})
            mpq_class factor(1);
            long r = chi2.modulus();
            for (long p = 2; p <= r; ++p) {
                if (r % p != 0) continue;
                bool prime = true;
                for (long d = 2; d * d <= p; ++d)
                    if (p % d == 0) { prime = false; break; }
                if (!prime) continue;
                if (!prim.is_unit(p)) continue;
                mpz_class pm;
                mpz_ui_pow_ui(pm.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(m - 1));
                factor *= (1 - prim.real_value(p) * mpq_class(pm));
            }
            out.constant *= factor;
        }
        out.constant /= 2;
    } else if (chi2.is_trivial() && m == 1) {
        auto [D, prim] = chars::conductor_and_primitivize(chi1);
        (void)D;
        out.constant = lfunc::l_negative_integer_exact(prim, 0) / 2;
    } else {
        out.constant = 0;
    }
    out.constant.canonicalize();
    out.coeff.reserve(N);
    for (long n = 1; n <= N; ++n)
        out.coeff.push_back(sigma_double_exact(m - 1, chi1, chi2, n));
    return out;
}

QDerivativeReport qderivative_check(long s1, long s2, const Character& chi1,
                                    const Character& chi2, long N) {
    const long m = s1 - s2 + 1;
    if (m < 1) throw DomainError("qderivative_check: need s1 - s2 + 1 >= 1");
    if ((m - chi1.parity() - chi2.parity()) % 2 != 0)
        throw ParityError("qderivative_check: m must match kappa1 + kappa2 mod 2");
    QDerivativeReport rep;
    for (long n = 1; n <= N; ++n) {
        // coefficient of q^n in Xi is sigma_{s1-s2}(n)/n^{s1}; after (q d/dq)^{s1}
        // it becomes n^{s1} * that = sigma_{m-1}(n)
        mpz_class xi_side = sigma_double_exact(s1 - s2, chi1, chi2, n);
        mpz_class g_side = sigma_double_exact(m - 1, chi1, chi2, n);
        if (xi_side != g_side) {
            rep.pass = false;
            rep.first_fail = n;
            return rep;
        }
    }
    return rep;
}

} // namespace lseries::qseries
