#include "lseries/lfunc.hpp"

#include "lseries/errors.hpp"
#include "lseries/numerics.hpp"

namespace lseries::lfunc {

namespace {

bool is_pole(const Character& chi, const Complex& s) {
    return chi.is_principal() && s.im.is_zero() && s.re == 1L;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

Complex l_value(const Character& chi, const Complex& s, const PrecisionContext& ctx) {
    if (is_pole(chi, s)) throw PoleError("l_value: principal character at s = 1");
    PrecisionGuard guard(ctx.working_bits());
    const long r = chi.modulus();
    if (chi.is_principal()) {
        Complex z = numerics::hurwitz_zeta(s, Real(1L), ctx);
        for (long p : prime_factors(r))
            z = z * (Complex(1L) - pow(Complex(Real(static_cast<long>(p))), -s));
        return z;
    }
    // pole parts of the Hurwitz pieces cancel (sum of chi over units is 0)
    Complex acc;
    for (long a = 1; a <= r; ++a) {
        if (!chi.is_unit(a)) continue;
        acc += chi.value(a) * numerics::hurwitz_zeta_minus_pole(s, Real(mpq_class(a, r)), ctx);
    }
    return acc * pow(Complex(Real(static_cast<long>(r))), -s);
}

mpq_class l_negative_integer_exact(const Character& chi, unsigned k) {
    if (!chi.is_primitive())
        throw DomainError("l_negative_integer_exact: character must be primitive");
    if (!chi.is_real())
        throw DomainError("l_negative_integer_exact: exact value needs a real character");
    const long r = chi.modulus();
    // L(chi,-k) = (-1)^k r^k/(k+1) sum_n chi(n) B_{k+1}(1 - n/r)
    mpq_class acc(0);
    for (long n = 1; n <= r; ++n) {
        int v = chi.is_unit(n) ? chi.real_value(n) : 0;
        if (v == 0) continue;
        acc += v * numerics::bernoulli_polynomial_exact(k + 1, mpq_class(r - n, r));
    }
    mpz_class rk;
    mpz_ui_pow_ui(rk.get_mpz_t(), static_cast<unsigned long>(r), k);
    mpq_class out = acc * rk / mpq_class(k + 1);
    if (k % 2 == 1) out = -out;
    out.canonicalize();
    return out;
}

Complex l_negative_integer(const Character& chi, unsigned k, const PrecisionContext& ctx) {
    if (!chi.is_primitive())
        throw DomainError("l_negative_integer: character must be primitive");
    PrecisionGuard guard(ctx.working_bits());
    if (chi.is_real()) return Complex(Real(l_negative_integer_exact(chi, k)));
    const long r = chi.modulus();
    Complex acc;
    for (long n = 1; n <= r; ++n) {
        if (!chi.is_unit(n)) continue;
        acc += chi.value(n) *
               Real(numerics::bernoulli_polynomial_exact(k + 1, mpq_class(r - n, r)));
    }
    Real rk = pow(Real(static_cast<long>(r)), static_cast<long>(k));
    Complex out = acc * rk / Real(static_cast<long>(k + 1));
    if (k % 2 == 1) out = -out;
    return out;
}

Complex l_positive_easy(const Character& chi, long m, const PrecisionContext& ctx) {
    if (!chi.is_primitive())
        throw DomainError("l_positive_easy: character must be primitive");
    const int kappa = chi.parity();
    if (m < 1 || (m - kappa) % 2 != 0)
        throw ParityError("l_positive_easy: m must be positive with m = 2k - kappa");
    PrecisionGuard guard(ctx.working_bits());
    const long r = chi.modulus();
    const long k = (m + kappa) / 2;
    Character bar = chi.conjugate();
    Complex sum;
    for (long n = 1; n <= r; ++n) {
        if (!bar.is_unit(n)) continue;
        sum += bar.value(n) *
               Real(numerics::bernoulli_polynomial_exact(static_cast<unsigned>(m),
                                                         mpq_class(r - n, r)));
    }
    // prefactor carries eps(chi), not eps(conj chi): forced by the functional
    // equation combined with the Bernoulli formula at 1-m (see ledger; the two
    // agree for real characters)
    Complex eps = chars::gauss_data(chi, ctx).epsilon;
    Real fact(1L);
    for (long j = 2; j <= m; ++j) fact *= Real(j);
    Real pw = pow(const_pi(), m) * pow(Real(2L), m - 1) / sqrt(Real(r));
    Complex out = eps * pw / fact * sum;
    if (k % 2 == 0) out = -out;  // (-1)^{k-1}
    return out;
}

Complex l_derivative(const Character& chi, const Complex& s, const PrecisionContext& ctx) {
    if (is_pole(chi, s)) throw PoleError("l_derivative: principal character at s = 1");
    PrecisionGuard guard(ctx.working_bits());
    const long r = chi.modulus();
    if (chi.is_principal()) {
        auto [z, dz] = numerics::hurwitz_zeta_with_ds(s, Real(1L), ctx);
        // d/ds [zeta * prod (1 - p^-s)] = zeta' prod + zeta sum_p log p p^-s prod/(1-p^-s)
        Complex prod(1L), corr;
        for (long p : prime_factors(r)) {
            Complex ps = pow(Complex(Real(p)), -s);
            prod = prod * (Complex(1L) - ps);
            corr += log(Real(p)) * ps / (Complex(1L) - ps);
        }
        return dz * prod + z * prod * corr;
    }
    Complex acc, dacc;
    for (long a = 1; a <= r; ++a) {
        if (!chi.is_unit(a)) continue;
        auto [z, dz] = numerics::hurwitz_zeta_minus_pole_with_ds(s, Real(mpq_class(a, r)), ctx);
        Complex cv = chi.value(a);
        acc += cv * z;
        dacc += cv * dz;
    }
    Complex rms = pow(Complex(Real(r)), -s);
    return rms * (dacc - acc * log(Real(r)));
}

Complex functional_equation_residual(const Character& chi, const Complex& s,
                                     const PrecisionContext& ctx) {
    if (!chi.is_primitive())
        throw DomainError("functional_equation_residual: primitive characters only");
    PrecisionGuard guard(ctx.working_bits());
    const long r = chi.modulus();
    const int kappa = chi.parity();
    Complex lhs = l_value(chi, s, ctx);
    Character bar = chi.conjugate();
    Complex eps = chars::gauss_data(chi, ctx).epsilon;
    Real pi = const_pi();
    Complex pref = eps * exp(s * log(Real(2L))) * exp((s - 1L) * log(pi)) *
                   exp((Complex(Real(0.5)) - s) * log(Real(r)));
    Complex tail;
    bool int_pole = s.im.is_zero() && s.re.is_integer() && s.re > Real(0L);
    if (!int_pole) {
        tail = numerics::gamma(Complex(1L) - s, ctx) *
               sin(pi / 2L * (s + static_cast<long>(kappa))) *
               l_value(bar, Complex(1L) - s, ctx);
    } else {
        // Gamma(1-s) pole at positive integer s = m, balanced either by the
        // sine zero (m+kappa even) or by the trivial zero of L(conj chi, 1-m)
        const long m = s.re.to_long();
        if (chi.is_trivial() && m == 1)
            throw PoleError("functional_equation_residual: zeta pole at s = 1");
        Real fact(1L);
        for (long j = 2; j <= m - 1; ++j) fact *= Real(j);
        if ((m + kappa) % 2 == 0) {
            const long k = (m + kappa) / 2;
            Real lim = pi / (Real(2L) * fact);
            if ((k + m) % 2 == 1) lim = -lim;  // (-1)^{k+m}
            tail = Complex(lim) * l_value(bar, Complex(1L - m), ctx);
        } else {
            Real lim = Real(1L) / fact;
            if (m % 2 == 0) lim = -lim;  // (-1)^{m-1}
            Real sgn = sin(pi / 2L * Real(m + kappa));
            tail = Complex(lim * sgn) * l_derivative(bar, Complex(1L - m), ctx);
        }
    }
    return lhs - pref * tail;
}

mpq_class principal_residue(long r) {
    if (r < 1) throw DomainError("principal_residue: r >= 1");
    mpq_class out(chars::euler_phi(r), r);
    out.canonicalize();
    return out;
}

Complex l_value_via_primitive(const Character& chi, const Complex& s,
                              const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    auto [D, prim] = chars::conductor_and_primitivize(chi);
    Complex base = (prim.is_principal() && s.im.is_zero() && s.re == 1L)
                       ? Complex(Real(0L))  // caller guards; principal at 1 is a pole
                       : l_value(prim, s, ctx);
    Complex factor;
    for (long d : chars::divisors(chi.modulus())) {
        int mu = chars::moebius(d);
        if (mu == 0 || !prim.is_unit(d)) continue;
        factor += Real(mu) * prim.value(d) * pow(Complex(Real(d)), -s);
    }
    return base * factor;
}

Complex l_value_series_oracle(const Character& chi, const Complex& s, long terms,
                              const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Complex acc;
    for (long n = 1; n <= terms; ++n) {
        if (!chi.is_unit(n)) continue;
        acc += chi.value(n) * pow(Complex(Real(n)), -s);
    }
    return acc;
}

} // namespace lseries::lfunc
