#pragma once

#include <vector>

#include "lseries/chars.hpp"
#include "lseries/complex.hpp"
#include "lseries/precision.hpp"

namespace lseries::qseries {

using chars::Character;

// one evaluation point: tau in the upper half-plane, y = -i tau (Re y > 0),
// q = e^{2 pi i tau}, kept mutually consistent
struct QPoint {
    Complex tau, y, q;

    static QPoint from_tau(const Complex& tau);
    static QPoint from_y(const Complex& y);
    // Fricke-style dual point tau -> -1/(N tau)
    QPoint dual(long N) const;
    // tau -> k tau (q -> q^k)
    QPoint scaled(long k) const;
};

struct SeriesParams {
    Complex s1, s2;
    Character chi1, chi2;

    SeriesParams swapped() const { return {s2, s1, chi2, chi1}; }
};

// sum_{d|n} chi1(n/d) chi2(d) d^s
Complex sigma_double(const Complex& s, const Character& chi1, const Character& chi2, long n,
                     const PrecisionContext& ctx);
// exact variant: real characters, integer s >= 0
mpz_class sigma_double_exact(long s, const Character& chi1, const Character& chi2, long n);

enum class SigmaKind { twisted, alt };  // twisted: chi(n/d) d^s; alt: chi(d) d^s
Complex sigma_single(SigmaKind kind, const Complex& s, const Character& chi, long n,
                     const PrecisionContext& ctx);
mpz_class sigma_single_exact(SigmaKind kind, long s, const Character& chi, long n);

// Xi_{s1,s2}(chi1,chi2;q) by direct double summation with geometric tail bound
Complex xi_direct(const SeriesParams& p, const QPoint& z, const PrecisionContext& ctx);

// L_s(chi1,chi2;q) via the closed rational Phi_0 form
Complex lambert(const Complex& s, const Character& chi1, const Character& chi2, const QPoint& z,
                const PrecisionContext& ctx);
// Ltilde_s(chi;q) = sum chi(n) Li_s(q^n)
Complex lambert_tilde(const Complex& s, const Character& chi, const QPoint& z,
                      const PrecisionContext& ctx);

// Phi_s(chi;q) by direct summation
Complex phi(const Complex& s, const Character& chi, const QPoint& z, const PrecisionContext& ctx);
// Phi_0 closed rational form sum_{a in units} chi(a) x^a / (1 - x^r)
Complex phi0_closed(const Character& chi, const Complex& x);

struct EisensteinCoeffs {
    mpq_class constant;             // A_m
    std::vector<mpz_class> coeff;   // coeff[n-1] = sigma_{m-1}(chi1,chi2;n), n = 1..N
};
// exact q-expansion of G_m(chi1,chi2); real characters required
EisensteinCoeffs eisenstein_q_coeffs(long m, const Character& chi1, const Character& chi2, long N);
// A_m for arbitrary characters, numeric
Complex eisenstein_constant(long m, const Character& chi1, const Character& chi2,
                            const PrecisionContext& ctx);

struct QDerivativeReport {
    bool pass = true;
    long first_fail = 0;
};
// verifies (q d/dq)^{s1} Xi = G^0_m coefficient-wise for n <= N (exact)
QDerivativeReport qderivative_check(long s1, long s2, const Character& chi1,
                                    const Character& chi2, long N);

} // namespace lseries::qseries
