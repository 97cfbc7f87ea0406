#include "lseries/asym.hpp"

#include <cmath>

#include "lseries/errors.hpp"
#include "lseries/lfunc.hpp"
#include "lseries/numerics.hpp"

namespace lseries::asym {

namespace {

bool int_value(const Complex& s, long& n) {
    if (!s.im.is_zero() || !s.re.is_integer()) return false;
    n = s.re.to_long();
    return true;
}

// exact harmonic number H_{m-1} = gamma + psi(m)
mpq_class harmonic(long m) {
    mpq_class h(0);
    for (long j = 1; j <= m - 1; ++j) h += mpq_class(1, j);
    return h;
}

// sum_{p | r} log p/(p-1) as a Real
Real prime_log_sum(long r) {
    Real acc;
    for (long p = 2; p <= r; ++p) {
        if (r % p != 0) continue;
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        acc += log(Real(p)) / Real(p - 1);
    }
    return acc;
}

// upper incomplete gamma Gamma(b, eps) via Gamma(b) minus the lower series;
// fine for moderate eps (callers elevate precision to absorb e^eps cancellation)
Complex upper_gamma(const Complex& b, const Real& eps, const PrecisionContext& ctx) {
    long nb;
    if (int_value(b, nb) && nb <= 0)
        throw UnsupportedError("upper_gamma: b at a non-positive integer");
    Complex lower;
    Complex term = Complex(1L) / b;  // k = 0
    lower = term;
    Complex epow(1L);
    Real fact(1L);
    const Real fl = precision_floor(8);
    for (long k = 1; k < 100000; ++k) {
        epow = epow * -eps;
        fact *= Real(k);
        Complex t = epow / (fact * (b + k));
        lower += t;
        if (k > 2 && abs(t) < fl * (abs(lower) + Real(1L))) break;
    }
    lower = lower * pow(Complex(eps), b);
    return numerics::gamma(b, ctx) - lower;
}

}  // namespace

// Phi_s(chi; u) = sum chi(n) n^{-s} e^{-2 pi n u} for real u > 0, non-principal
// chi, by residue-class Euler-Maclaurin: uniformly accurate down to u -> 0+
// where direct summation needs ~1/u terms.
Complex phi_lattice(const Character& chi, const Complex& s, const Real& u) {
    if (chi.is_principal())
        throw DomainError("phi_lattice: non-principal character required");
    if (!(u > Real(0L))) throw DomainError("phi_lattice: u > 0");
    const long r = chi.modulus();
    const mpfr_prec_t wp0 = working_precision();
    // direct summation wins for u bounded away from 0
    if (u > Real(0.05)) {
        Complex acc;
        Real t = const_pi() * -2L * u;
        const long N = static_cast<long>((wp0 + 24) * 0.6931 / (2 * const_pi().to_double() *
                                                                u.to_double())) + 4;
        for (long n = 1; n <= N; ++n) {
            if (!chi.is_unit(n)) continue;
            acc += chi.value(n) * pow(Complex(Real(n)), -s) * Complex(exp(t * Real(n)));
        }
        return acc;
    }
    // shift so that 2 pi t_a / r exceeds wp0 ln 2: the EM minimum term then
    // undercuts the caller's floor
    const long K0 = static_cast<long>(0.1103 * wp0) + 3;
    const Real tmax = Real(r - 1 + K0 * r);
    const double eps_top = 2 * const_pi().to_double() * u.to_double() * tmax.to_double();
    PrecisionGuard guard(wp0 + 48 + static_cast<long>(1.5 * eps_top));
    PrecisionContext ictx(working_precision(), std::max<long>(1, working_precision() / 4), 0);
    Real two_pi_u = const_pi() * 2L * u;
    Complex b = Complex(1L) - s;
    Complex acc;
    auto g = [&](const Real& t) {
        return pow(Complex(t), -s) * Complex(exp(-(two_pi_u * t)));
    };
    for (long a = 1; a <= r; ++a) {
        if (!chi.is_unit(a)) continue;
        Complex part;
        for (long k = 0; k < K0; ++k) part += g(Real(a + k * r));
        Real ta(a + K0 * r);
        // integral piece: (1/r)(2 pi u)^{s-1} Gamma(1-s, 2 pi u t_a)
        part += pow(Complex(two_pi_u), s - 1L) * upper_gamma(b, two_pi_u * ta, ictx) / Real(r);
        Complex gta = g(ta);
        part += gta * Real(0.5);
        // EM corrections: - sum B_{2j}/(2j)! r^{2j-1} g^{(2j-1)}(t_a), where
        // g^{(m)}(t) = e^{-c t} t^{-s} sum_i c_{m,i} t^{-i}, c = 2 pi u
        std::vector<Complex> h = {Complex(1L)};  // h_0
        Real rm(1L);                              // r^{m}
        mpz_class fact(1);
        Complex corr;
        const Real fl = ldexp2(Real(1L), -(static_cast<long>(wp0) + 16));
        Real prev_mag(0.0);
        for (long j = 1; j < 2000; ++j) {
            // advance h by two derivative steps to order m = 2j-1
            for (int step = 0; step < 2; ++step) {
                long mord = static_cast<long>(h.size()) - 1;
                std::vector<Complex> nh(h.size() + 1);
                for (long i = 0; i <= mord; ++i) {
                    nh[i] += h[i] * (-two_pi_u);         // -c h_i
                    nh[i + 1] += h[i] * (-(s + i));      // d/dt t^{-s-i} factor
                }
                h = std::move(nh);
                if (static_cast<long>(h.size()) - 1 == 2 * j - 1) break;
            }
            rm = rm * Real(r) * Real(r);
            fact *= (2 * j) * (2 * j - 1);
            // evaluate g^{(2j-1)}(ta) = e^{-c ta} ta^{-s} sum_i h_i ta^{-i}
            Complex hv;
            Real tpow(1L);
            for (size_t i = 0; i < h.size(); ++i) {
                hv += h[i] / Real(tpow);
                tpow = tpow * ta;
            }
            Complex gm = gta * hv;  // gta already e^{-c ta} ta^{-s}
            mpq_class coeff = numerics::bernoulli_number(static_cast<unsigned>(2 * j)) /
                              mpq_class(fact);
            Complex term = Real(coeff) * (rm / Real(r)) * gm;
            corr += term;
            Real mag = abs(term);
            if (mag < fl * (abs(part) + Real(1L))) break;
            if (j > 6 && mag > prev_mag)
                throw ConvergenceError("phi_lattice: EM correction not converging");
            prev_mag = mag;
        }
        part -= corr;
        acc += chi.value(a) * part;
    }
    return acc;
}

bool l_trivial_zero(const Character& chi, long s) {
    if (s > 0) return false;
    const int kappa = chi.parity();
    if (chi.is_principal()) {
        if (chi.is_trivial()) return s < 0 && s % 2 == 0;  // zeta: -2, -4, ...
        return s % 2 == 0;                                 // r > 1: 0, -2, -4, ...
    }
    long m = -s;  // zeros at s = -kappa - 2k, i.e. -s = kappa (mod 2)
    return (m % 2) == (kappa % 2);
}

bool is_terminating(const SeriesParams& p) {
    long a, b;
    if (!int_value(p.s1, a) || !int_value(p.s2, b)) return false;
    return ((a + b) % 2 + 2) % 2 == ((p.chi1.parity() + p.chi2.parity() + 1) % 2);
}

Complex PertExpansion::eval(const Complex& y, long k_max) const {
    Complex acc;
    Complex l2py = log(y * (const_pi() * 2L));
    for (const auto& t : isolated) {
        Complex piece = t.coeff * pow(y, t.exponent);
        if (t.with_log) piece = piece * l2py;
        acc += piece;
    }
    long K = static_cast<long>(series.size());
    if (k_max >= 0) K = std::min(K, k_max + 1);
    Complex yp(1L);
    for (long k = 0; k < K; ++k) {
        acc += series[k] * yp;
        yp = yp * y;
    }
    return acc;
}

long PertExpansion::optimal_truncation(const Real& y) const {
    long best = 0;
    Real best_mag;
    bool have = false;
    Real yp(1L);
    for (long k = 0; k < static_cast<long>(series.size()); ++k) {
        Real mag = abs(series[k]) * yp;
        if (!series[k].is_zero() && (!have || mag < best_mag)) {
            best = k;
            best_mag = mag;
            have = true;
        }
        yp = yp * abs(y);
    }
    return best;
}

PertExpansion pert_expansion(const SeriesParams& p, long K, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    PertExpansion out;
    out.terminating = is_terminating(p);

    long m1 = 0, m2 = 0;
    const bool i1 = int_value(p.s1, m1);
    const bool i2 = int_value(p.s2, m2);
    const bool merge2 = p.chi2.is_principal() && i2 && m2 >= 1;  // pole side for chi2
    const bool merge1 = p.chi1.is_principal() && i1 && m1 >= 1;
    if (merge1 && merge2 && m1 == m2)
        throw UnsupportedError("pert_expansion: double pole with both characters principal "
                               "and s1 = s2 a positive integer");

    auto isolated_for = [&](const Complex& sa, const Complex& sb, const Character& ca,
                            const Character& cb, bool merged, long mb) {
        // contribution of the y^{sb-1} monomial for cb principal
        if (!cb.is_principal()) return;
        const long r2 = cb.modulus();
        Real phi_over_r = Real(mpq_class(chars::euler_phi(r2), r2));
        if (!merged) {
            Complex A = pow(Complex(const_pi() * 2L), sb - 1L) *
                        numerics::gamma(Complex(1L) - sb, ctx) *
                        lfunc::l_value(ca, sa + 1L - sb, ctx) * phi_over_r;
            out.isolated.push_back({A, sb - 1L, false});
            return;
        }
        // merged limit: bracket [L'/L + sum_p log p/(p-1) + H_{m-1} - log(2 pi y)]
        // times (-2 pi y)^{m-1}/(m-1)! L(ca, sa+1-m) phi(r)/r
        Complex Lv = lfunc::l_value(ca, sa + 1L - mb, ctx);
        Complex Lp = lfunc::l_derivative(ca, sa + 1L - mb, ctx);
        Real fact(1L);
        for (long j = 2; j <= mb - 1; ++j) fact *= Real(j);
        Real c = pow(const_pi() * 2L, mb - 1) / fact * phi_over_r;
        if ((mb - 1) % 2 == 1) c = -c;  // (-2 pi)^{m-1}
        Complex bracket_reg = Lp + Lv * (prime_log_sum(r2) + Real(harmonic(mb)));
        out.isolated.push_back({Complex(c) * bracket_reg, Complex(mb - 1), false});
        out.isolated.push_back({Complex(-c) * Lv, Complex(mb - 1), true});
    };
    isolated_for(p.s1, p.s2, p.chi1, p.chi2, merge2, m2);
    isolated_for(p.s2, p.s1, p.chi2, p.chi1, merge1, m1);

    out.series.assign(K, Complex(0L));
    Real fact(1L);
    for (long k = 0; k < K; ++k) {
        if (k > 0) fact *= Real(k);
        if ((merge2 && k == m2 - 1) || (merge1 && k == m1 - 1)) continue;  // folded above
        // exact trivial-zero detection avoids noise terms
        long a, b;
        bool za = int_value(p.s1, a) && l_trivial_zero(p.chi1, a - k);
        bool zb = int_value(p.s2, b) && l_trivial_zero(p.chi2, b - k);
        if (za || zb) continue;
        Complex L1 = lfunc::l_value(p.chi1, p.s1 - k, ctx);
        Complex L2 = lfunc::l_value(p.chi2, p.s2 - k, ctx);
        Real c = pow(const_pi() * 2L, k) / fact;
        if (k % 2 == 1) c = -c;
        out.series[k] = Complex(c) * L1 * L2;
    }
    if (out.terminating) {
        out.truncation_index = -1;
        for (long k = 0; k < K; ++k)
            if (!out.series[k].is_zero()) out.truncation_index = k;
        // the bound max(s_i + kappa_i) is within K when the caller asked for
        // enough terms; past it everything vanished exactly above
    }
    return out;
}

PertExpansion terminating_polynomial(long s, const Character& chi, LambertKind kind,
                                     const PrecisionContext& ctx) {
    const int kappa = chi.parity();
    SeriesParams p;
    Character triv = chars::character_from_conrey(1, 1);
    if (kind == LambertKind::L) {
        if ((s + kappa) % 2 == 0)
            throw ParityError("terminating_polynomial: L-kind needs s+1 = m of the character parity");
        p = SeriesParams{Complex(s), Complex(0L), chi, triv};
    } else {
        if ((s + kappa) % 2 == 0)
            throw ParityError("terminating_polynomial: Ltilde-kind parity violated");
        p = SeriesParams{Complex(0L), Complex(s), chi, triv};
    }
    const long K = s + kappa + 3;
    return pert_expansion(p, K, ctx);
}

Complex BorelInput::prefactor(const Complex& y) const {
    Complex out = pow(y, s1 + s2 - 1L);
    out = out * pow(Complex(Real(r1)), s2 - Real(0.5)) * pow(Complex(Real(r2)), s1 - Real(0.5));
    return out * eps1 * eps2 / const_pi();
}

Complex BorelInput::coeff(long k, const PrecisionContext& ctx) const {
    if (coeff_is_zero(k)) return Complex(0L);
    Complex g1 = numerics::gamma(s1 * Real(-1L) + Real(k + 1), ctx);
    Complex g2 = numerics::gamma(s2 * Real(-1L) + Real(k + 1), ctx);
    Real fact(1L);
    for (long j = 2; j <= k; ++j) fact *= Real(j);
    Complex bracket = (k % 2 == 0) ? (sin1 - sin2) : (sin1 + sin2);
    return g1 * g2 / fact * bracket;
}

bool BorelInput::coeff_is_zero(long k) const {
    long a, b;
    // bracket = sin1 - (-1)^k sin2 vanishes identically when s2 (or s1) is an
    // integer and the parity matches (see the AsyXiSt trigonometric identity)
    if (int_value(s2, b) && ((k - b - kappa2) % 2 + 2) % 2 == 0) return true;
    if (int_value(s1, a) && ((k - a - kappa1) % 2 + 2) % 2 == 0) return true;
    return false;
}

Complex BorelInput::z_of(long n1, long n2, const Complex& y) const {
    return Complex(const_pi() * 2L * Real(n1 * n2)) / (Real(r1 * r2) * y);
}

BorelInput borel_input_coeffs(const SeriesParams& p, const PrecisionContext& ctx) {
    if (!p.chi1.is_primitive() || !p.chi2.is_primitive())
        throw DomainError("borel_input_coeffs: primitive characters required "
                          "(route imprimitive ones through the decomposition)");
    PrecisionGuard guard(ctx.working_bits());
    BorelInput b;
    b.s1 = p.s1;
    b.s2 = p.s2;
    b.kappa1 = p.chi1.parity();
    b.kappa2 = p.chi2.parity();
    b.r1 = p.chi1.modulus();
    b.r2 = p.chi2.modulus();
    Real half_pi = const_pi() / 2L;
    b.sin1 = sin(Complex(half_pi) * (p.s1 + p.s2 + Real(b.kappa1 + b.kappa2 - 1)));
    b.sin2 = sin(Complex(half_pi) * (p.s1 - p.s2 + Real(b.kappa1 - b.kappa2 - 1)));
    b.eps1 = chars::gauss_data(p.chi1, ctx).epsilon;
    b.eps2 = chars::gauss_data(p.chi2, ctx).epsilon;
    return b;
}

PertExpansion zagier_oracle(const SeriesParams& p, long K, const PrecisionContext& ctx) {
    if (!p.chi2.is_principal())
        throw DomainError("zagier_oracle: chi2 must be trivial or principal");
    if (p.chi1.is_principal())
        throw DomainError("zagier_oracle: chi1 must be non-principal");
    PrecisionGuard guard(ctx.working_bits());
    const long r2 = p.chi2.modulus();
    long m2 = 0;
    const bool logcase = int_value(p.s2, m2) && m2 >= 1;

    PertExpansion out;
    out.terminating = is_terminating(p);

    auto Phi = [&](const Real& u) { return phi_lattice(p.chi1, p.s1, u); };

    // Riemann term by quadrature: I = int_0^infty u^{-s2} Phi(u) du (regulated
    // with b_{-1} e^{-2 pi u}/u subtracted in the log case)
    Complex bm1;
    if (logcase) {
        Real c = pow(const_pi() * 2L, m2 - 1);
        Real fact(1L);
        for (long j = 2; j <= m2 - 1; ++j) fact *= Real(j);
        c = c / fact;
        if ((m2 - 1) % 2 == 1) c = -c;
        bm1 = Complex(c) * lfunc::l_value(p.chi1, p.s1 + 1L - m2, ctx);
    }
    auto integrand = [&](const Real& u) {
        Complex v = pow(Complex(u), -p.s2) * Phi(u);
        if (logcase) v -= bm1 * exp(const_pi() * -2L * u) / u;
        return v;
    };
    Real fl = precision_floor(12);
    Complex I = numerics::integrate_halfline([&](const Real& u) { return integrand(u); },
                                             Real(0.25), fl);
    // multiply by the Moebius sum for a principal (r2 > 1) modulus:
    // sum_{d | r2} mu(d)/d = phi(r2)/r2 on the Riemann piece
    Real phi_over_r = Real(mpq_class(chars::euler_phi(r2), r2));
    if (!logcase) {
        out.isolated.push_back({I * phi_over_r, p.s2 - 1L, false});
    } else {
        // the naive-series/g-subtraction corrections collapse to the single
        // constant b log(2 pi) (plus the prime-log sum from the Moebius
        // spreading when r2 > 1); regular and log parts at y^{m-1}:
        Complex reg = (I + bm1 * (log(const_pi() * 2L) + prime_log_sum(r2))) * phi_over_r;
        out.isolated.push_back({reg, Complex(m2 - 1), false});
        out.isolated.push_back({-bm1 * phi_over_r, Complex(m2 - 1), true});
    }

    // naive series: a_k = (-2 pi)^k / k! L(chi1, s1-k) L(chi_{r2,1}, s2-k)
    out.series.assign(K, Complex(0L));
    Real fact(1L);
    for (long k = 0; k < K; ++k) {
        if (k > 0) fact *= Real(k);
        if (logcase && k == m2 - 1) continue;
        long a;
        if (int_value(p.s1, a) && l_trivial_zero(p.chi1, a - k)) continue;
        long bidx;
        if (int_value(p.s2, bidx) && l_trivial_zero(p.chi2, bidx - k)) continue;
        Complex L1 = lfunc::l_value(p.chi1, p.s1 - k, ctx);
        Complex L2 = lfunc::l_value(p.chi2, p.s2 - k, ctx);
        Real c = pow(const_pi() * 2L, k) / fact;
        if (k % 2 == 1) c = -c;
        out.series[k] = Complex(c) * L1 * L2;
    }
    return out;
}

} // namespace lseries::asym
