#pragma once

#include <functional>
#include <vector>

#include "lseries/complex.hpp"
#include "lseries/errors.hpp"
#include "lseries/precision.hpp"

namespace lseries::numerics {

// ---- Bernoulli numbers / polynomials -------------------------------------

// B_k with B_1 = -1/2; cached, write-once/read-many, thread-safe.
mpq_class bernoulli_number(unsigned k);
mpq_class bernoulli_polynomial_exact(unsigned k, const mpq_class& x);
Real bernoulli_polynomial(unsigned k, const Real& x, const PrecisionContext& ctx);

// ---- zeta / gamma family ---------------------------------------------------

// Analytic continuation of sum (n+a)^-s, 0 < a <= 1 (a > 1 tolerated),
// via Euler-Maclaurin with tail bound. s != 1.
Complex hurwitz_zeta(const Complex& s, const Real& a, const PrecisionContext& ctx);
// value and d/ds together
std::pair<Complex, Complex> hurwitz_zeta_with_ds(const Complex& s, const Real& a,
                                                 const PrecisionContext& ctx);
Complex riemann_zeta(const Complex& s, const PrecisionContext& ctx);

// zeta(s,a) - 1/(s-1): analytic at s = 1 (equals -digamma(a) there); the
// character sum of these carries non-principal L-values through s = 1
Complex hurwitz_zeta_minus_pole(const Complex& s, const Real& a, const PrecisionContext& ctx);
std::pair<Complex, Complex> hurwitz_zeta_minus_pole_with_ds(const Complex& s, const Real& a,
                                                            const PrecisionContext& ctx);

Complex log_gamma(const Complex& z, const PrecisionContext& ctx);  // principal, continuous off (-inf,0]
Complex gamma(const Complex& z, const PrecisionContext& ctx);
// 1/Gamma(z); exact 0 at non-positive integers
Complex rgamma(const Complex& z, const PrecisionContext& ctx);
Complex digamma(const Complex& z, const PrecisionContext& ctx);
// psi^{(n)}(x), n >= 1, x > 0
Real polygamma(unsigned n, const Real& x, const PrecisionContext& ctx);

enum class GammaKind { gamma, log_gamma, digamma };
Complex gamma_like(GammaKind kind, const Complex& z, const PrecisionContext& ctx);

// ---- hypergeometric / polylog ----------------------------------------------

enum class CutSide { none, above, below };

// Gauss 2F1 with analytic continuation off the cut [1, inf); on the cut a
// side must be requested. Integer-degenerate parameter differences are
// handled by averaged parameter perturbation at elevated precision.
Complex hyp2f1(const Complex& a, const Complex& b, const Complex& c, const Complex& z,
               const PrecisionContext& ctx, CutSide side = CutSide::none);

// regularized: 2F1 / Gamma(c), entire in c
Complex hyp2f1_regularized(const Complex& a, const Complex& b, const Complex& c,
                           const Complex& z, const PrecisionContext& ctx,
                           CutSide side = CutSide::none);

// sum z^n / n^s, |z| < 1
Complex polylog(const Complex& s, const Complex& z, const PrecisionContext& ctx);

// ---- quadrature --------------------------------------------------------------

// integral over the ray t = e^{i theta} u, u in (0, inf) of e^{-t z} f(t) dt;
// requires Re(z e^{i theta}) > 0. f may have an integrable singularity at 0.
Complex laplace_ray_integral(const std::function<Complex(const Complex&)>& f,
                             const Complex& z, const Real& theta,
                             const PrecisionContext& ctx);

// tanh-sinh rule over (0,1); f receives x and may be endpoint-singular.
// abs_floor: absolute error target.
Complex tanh_sinh_01(const std::function<Complex(const Real&)>& f, const Real& abs_floor);

// integral over (0, inf) with geometric segmentation [0,L],[L,2L],...;
// stops when a segment contributes less than abs_floor.
Complex integrate_halfline(const std::function<Complex(const Real&)>& f,
                           const Real& first_len, const Real& abs_floor, int max_segments = 64);

// Euler-Mascheroni at working precision
inline Real euler_gamma() { return const_euler(); }

} // namespace lseries::numerics
