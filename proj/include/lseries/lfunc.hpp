#pragma once

#include "lseries/chars.hpp"
#include "lseries/complex.hpp"
#include "lseries/precision.hpp"

namespace lseries::lfunc {

using chars::Character;

// L(chi, s) by Hurwitz decomposition (continuation everywhere except the
// principal-character pole at s=1). Principal characters route through
// zeta(s) prod_{p|r}(1 - p^-s).
Complex l_value(const Character& chi, const Complex& s, const PrecisionContext& ctx);

// L(chi, -k), primitive chi, via Bernoulli polynomials; exact rational for
// real characters
mpq_class l_negative_integer_exact(const Character& chi, unsigned k);
Complex l_negative_integer(const Character& chi, unsigned k, const PrecisionContext& ctx);

// closed form for L(chi, m) at positive integer m of the character's parity
// (m = 2k - kappa), primitive chi
Complex l_positive_easy(const Character& chi, long m, const PrecisionContext& ctx);

// dL/ds, analytic (differentiated Euler-Maclaurin)
Complex l_derivative(const Character& chi, const Complex& s, const PrecisionContext& ctx);

// L(chi,s) - eps(chi) 2^s pi^{s-1} r^{1/2-s} Gamma(1-s) sin(pi(s+kappa)/2) L(conj chi, 1-s)
Complex functional_equation_residual(const Character& chi, const Complex& s,
                                     const PrecisionContext& ctx);

mpq_class principal_residue(long r);  // res_{s=1} L(chi_{r,1}, s) = phi(r)/r

// imprimitive reduction L(chi_r,s) = L(chi_D,s) sum_{d|r} mu(d) chi_D(d) d^-s
Complex l_value_via_primitive(const Character& chi, const Complex& s,
                              const PrecisionContext& ctx);

// truncated Dirichlet series, test oracle (Re s > 1)
Complex l_value_series_oracle(const Character& chi, const Complex& s, long terms,
                              const PrecisionContext& ctx);

} // namespace lseries::lfunc
