#include <cmath>
#include <map>
#include <vector>

#include "lseries/numerics.hpp"

namespace lseries::numerics {

namespace {

struct Node {
    Real x;   // abscissa in (0,1); near 0 it carries full relative precision
    Real w;   // weight (without the level step h)
};

// nodes for level l are the odd multiples of h_l = 2^-l (level 0: all k >= 0
// plus the midpoint k=0); symmetric pairs stored explicitly.
struct Rule {
    mpfr_prec_t prec = 0;
    std::vector<std::vector<Node>> levels;
};

thread_local Rule g_rule;

void build_level(unsigned level) {
    Real pi_half = const_pi() / 2L;
    const mpfr_prec_t wp = working_precision();
    // stop when min(x, 1-x) < 2^-(wp+48)
    const double umax = std::asinh(((wp + 48) * std::log(2.0)) / M_PI);
    std::vector<Node> nodes;
    const double h = std::ldexp(1.0, -static_cast<int>(level));
    const long kstart = (level == 0) ? 0 : 1;
    const long kstep = (level == 0) ? 1 : 2;
    for (long k = kstart;; k += kstep) {
        const double u = k * h;
        if (u > umax) break;
        Real ur = Real(static_cast<long>(k)) * Real(h);
        Real sh = sinh(ur), ch = cosh(ur);
        Real v = pi_half * sh;
        // x- = 1/(1+e^{2v}) (small side), x+ = 1/(1+e^{-2v})
        Real e2v = exp(Real(2L) * v);
        Real xm = Real(1L) / (Real(1L) + e2v);
        Real xp = Real(1L) - xm;
        Real ch_v = cosh(v);
        // (0,1) map: x = (1+tanh v)/2, dx/du = (pi/4) cosh u / cosh^2 v
        Real w = pi_half * ch / (ch_v * ch_v) / Real(2L);
        if (k == 0) {
            nodes.push_back({xp, w});
        } else {
            nodes.push_back({xp, w});
            nodes.push_back({xm, w});
        }
    }
    g_rule.levels.push_back(std::move(nodes));
}

const std::vector<Node>& get_level(unsigned level) {
    const mpfr_prec_t wp = working_precision();
    if (g_rule.prec < wp) {
        g_rule.levels.clear();
        g_rule.prec = wp;
    }
    while (g_rule.levels.size() <= level) build_level(static_cast<unsigned>(g_rule.levels.size()));
    return g_rule.levels[level];
}

}  // namespace

Complex tanh_sinh_01(const std::function<Complex(const Real&)>& f, const Real& abs_floor) {
    const unsigned max_level = 12;
    Complex acc;
    Real h(1L);
    Complex prev;
    for (unsigned level = 0; level <= max_level; ++level) {
        const auto& nodes = get_level(level);
        Complex part;
        for (const auto& nd : nodes) part += f(nd.x) * nd.w;
        if (level == 0) {
            acc = part;
        } else {
            h = h / 2L;
            acc = acc / 2L + part * h;
        }
        if (level >= 3) {
            Real change = abs(acc - prev);
            if (change < abs_floor) return acc;
        }
        prev = acc;
    }
    Real change = abs(acc - prev);
    if (change > abs_floor * Real(1000000L))
        throw ConvergenceError("tanh_sinh_01: refinement stalled");
    return acc;
}

Complex integrate_halfline(const std::function<Complex(const Real&)>& f,
                           const Real& first_len, const Real& abs_floor, int max_segments) {
    Complex total;
    Real a(0L);
    Real len = first_len;
    for (int seg = 0; seg < max_segments; ++seg) {
        Real aa = a, ll = len;
        Complex part = tanh_sinh_01(
            [&](const Real& x) { return f(aa + ll * x); }, abs_floor / ll);
        part = part * len;
        total += part;
        if (seg >= 2 && abs(part) < abs_floor) return total;
        a = a + len;
        if (seg >= 1) len = len * 2L;
    }
    throw ConvergenceError("integrate_halfline: tail did not fall below floor");
}

Complex laplace_ray_integral(const std::function<Complex(const Complex&)>& f,
                             const Complex& z, const Real& theta,
                             const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    Complex dir = exp(Complex(Real(0L), theta));
    Complex zd = z * dir;
    if (!(zd.re > Real(0L)))
        throw ConvergenceError("laplace_ray_integral: Re(z e^{i theta}) <= 0");

    // probe scale with the first segment, then fix the absolute floor
    Real first_len = min(Real(1L), Real(4L) / zd.re);
    auto g = [&](const Real& u) {
        Complex t = dir * u;
        return exp(-(zd * u)) * f(t) * dir;
    };
    Real coarse_floor = precision_floor(working_precision() / 2);
    Complex probe = tanh_sinh_01([&](const Real& x) { return g(first_len * x); },
                                 coarse_floor) * first_len;
    Real scale = max(abs(probe), precision_floor(16));
    Real abs_floor = scale * precision_floor(12);
    return integrate_halfline(g, first_len, abs_floor);
}

} // namespace lseries::numerics
