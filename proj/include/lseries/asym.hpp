#pragma once

#include <vector>

#include "lseries/qseries.hpp"

namespace lseries::asym {

using chars::Character;
using qseries::SeriesParams;

// one isolated piece: coeff * y^exponent * (log(2 pi y) if with_log)
struct PertTerm {
    Complex coeff;
    Complex exponent;
    bool with_log = false;
};

// perturbative expansion of Xi_{s1,s2} as y -> 0+: isolated monomials (and
// the merged log term for integer s with a principal character) plus the
// power series sum_k a_k y^k with a_k = (-2 pi)^k/k! L(chi1,s1-k) L(chi2,s2-k)
struct PertExpansion {
    std::vector<PertTerm> isolated;
    std::vector<Complex> series;       // a_k, k = 0..K-1; merged k's hold 0 here
    bool terminating = false;
    long truncation_index = -1;        // last nonzero series index when terminating

    Complex eval(const Complex& y, long k_max = -1) const;
    // index of the smallest |a_k y^k| (optimal truncation) for real y
    long optimal_truncation(const Real& y) const;
};

PertExpansion pert_expansion(const SeriesParams& p, long K, const PrecisionContext& ctx);

enum class LambertKind { L, Ltilde };
// closed Laurent/log polynomial for terminating single-character cases
// (kind L: Xi_{s,0}(chi, trivial); kind Ltilde: Xi_{0,s}(chi, trivial))
PertExpansion terminating_polynomial(long s, const Character& chi, LambertKind kind,
                                     const PrecisionContext& ctx);

// the functional-equation rearrangement data of the perturbative series
struct BorelInput {
    Complex s1, s2;
    int kappa1 = 0, kappa2 = 0;
    long r1 = 1, r2 = 1;
    Complex sin1, sin2;        // the two sine constants
    Complex eps1, eps2;        // Gauss epsilons
    // prefactor P(y) = y^{s1+s2-1} r1^{s2-1/2} r2^{s1-1/2} eps1 eps2 / pi
    Complex prefactor(const Complex& y) const;
    // c_k = Gamma(k+1-s1)Gamma(k+1-s2)/k! [sin1 - (-1)^k sin2]
    Complex coeff(long k, const PrecisionContext& ctx) const;
    // true when the bracket vanishes identically at this k (integer s rules)
    bool coeff_is_zero(long k) const;
    // z_{n1 n2} = 2 pi n1 n2 / (r1 r2 y)
    Complex z_of(long n1, long n2, const Complex& y) const;
};
BorelInput borel_input_coeffs(const SeriesParams& p, const PrecisionContext& ctx);

// independent Zagier-method derivation for chi2 principal (Appendix-C route):
// Riemann term by quadrature, naive series coefficients; same layout as
// pert_expansion for term-by-term comparison
PertExpansion zagier_oracle(const SeriesParams& p, long K, const PrecisionContext& ctx);

// Phi_s(chi;u) = sum chi(n) n^{-s} e^{-2 pi n u}, real u > 0, non-principal chi;
// residue-class Euler-Maclaurin keeps it accurate uniformly as u -> 0+
Complex phi_lattice(const Character& chi, const Complex& s, const Real& u);

// true iff L(chi, s) vanishes trivially at integer s (functional-equation zeros)
bool l_trivial_zero(const Character& chi, long s);

// CondTrunc: integer parameters with s1+s2 = kappa1+kappa2+1 mod 2
bool is_terminating(const SeriesParams& p);

} // namespace lseries::asym
