#include "lseries/chars.hpp"

#include <algorithm>
#include <numeric>

#include "lseries/errors.hpp"

namespace lseries::chars {

namespace {

long power_mod(long base, long e, long m) {
    long acc = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (e > 0) {
        if (e & 1) acc = static_cast<long>((__int128)acc * base % m);
        base = static_cast<long>((__int128)base * base % m);
        e >>= 1;
    }
    return acc;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

// smallest g that generates (Z/p^k)^x for every k (primitive mod p and p^2),
// odd prime p; this is the root the Conrey labelling fixes
long primitive_root_pk(long p) {
    const long phi = p - 1;
    auto fac = factorize(phi);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (auto& [q, e] : fac) {
            (void)e;
            if (power_mod(g, phi / q, p) == 1) { ok = false; break; }
        }
        if (!ok) continue;
        if (power_mod(g, phi, p * p) == 1) continue;
        return g;
    }
    throw Error("primitive_root_pk: none found");
}

long dlog(long g, long x, long m, long ord) {
    long acc = 1 % m;
    for (long k = 0; k < ord; ++k) {
        if (acc == x % m) return k;
        acc = static_cast<long>((__int128)acc * g % m);
    }
    throw Error("dlog: element not in the cyclic subgroup");
}

}  // namespace

void Character::finalize() {
    // parity
    long m1 = (r_ == 1) ? 0 : r_ - 1;
    if (r_ <= 2) {
        kappa_ = 0;
    } else {
        mpq_class a = *angles_[m1];
        kappa_ = (a == 0) ? 0 : 1;  // chi(-1) is +-1
    }
    // order = lcm of angle denominators
    mpz_class ord(1);
    for (auto& a : angles_)
        if (a) ord = lcm(ord, a->get_den());
    order_ = ord.get_si();
    // conductor: smallest quasi-period D | r
    conductor_ = r_;
    for (long D : divisors(r_)) {
        bool ok = true;
        for (long x = 0; x < r_ && ok; ++x) {
            if (!angles_[x]) continue;
            for (long y = x % D; y < r_; y += D) {
                if (!angles_[y]) continue;
                if (*angles_[x] != *angles_[y]) { ok = false; break; }
            }
        }
        if (ok) { conductor_ = D; break; }
    }
}

bool Character::is_unit(long n) const {
    long x = n % r_;
    if (x < 0) x += r_;
    return angles_[x].has_value();
}

mpq_class Character::angle(long n) const {
    long x = n % r_;
    if (x < 0) x += r_;
    if (!angles_[x]) throw DomainError("Character::angle: gcd(n, r) > 1");
    return *angles_[x];
}

int Character::real_value(long n) const {
    long x = n % r_;
    if (x < 0) x += r_;
    if (!angles_[x]) return 0;
    const mpq_class& a = *angles_[x];
    if (a == 0) return 1;
    if (a == mpq_class(1, 2)) return -1;
    throw DomainError("Character::real_value: character is not real");
}

Complex Character::value(long n) const {
    long x = n % r_;
    if (x < 0) x += r_;
    if (!angles_[x]) return Complex(0L);
    const mpq_class& a = *angles_[x];
    if (a == 0) return Complex(1L);
    if (a == mpq_class(1, 2)) return Complex(-1L);
    if (a == mpq_class(1, 4)) return Complex(Real(0L), Real(1L));
    if (a == mpq_class(3, 4)) return Complex(Real(0L), Real(-1L));
    Real t = Real(a) * const_pi() * 2L;
    Real s, c;
    mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
    return Complex(c, s);
}

Character Character::conjugate() const {
    Character out = *this;
    for (auto& a : out.angles_) {
        if (a && *a != 0) {
            *a = 1 - *a;
            a->canonicalize();
        }
    }
    // conjugate Conrey label: inverse of ell mod r
    if (r_ > 1) {
        for (long m = 1; m < r_; ++m) {
            if ((__int128)m * ell_ % r_ == 1) { out.ell_ = m; break; }
        }
    }
    return out;
}

Character Character::times(const Character& o) const {
    if (r_ != o.r_) throw DomainError("Character::times: moduli differ");
    Character out = *this;
    out.ell_ = static_cast<long>((__int128)ell_ * o.ell_ % r_);
    if (out.ell_ == 0) out.ell_ = 1 % r_;
    for (long x = 0; x < r_; ++x) {
        if (out.angles_[x] && o.angles_[x]) {
            mpq_class s = *out.angles_[x] + *o.angles_[x];
            if (s >= 1) s -= 1;
            s.canonicalize();
            out.angles_[x] = s;
        } else {
            out.angles_[x].reset();
        }
    }
    out.finalize();
    return out;
}

std::string Character::label() const {
    return std::to_string(r_) + ":" + std::to_string(ell_);
}

Character character_from_conrey(long r, long ell) {
    if (r < 1) throw DomainError("character_from_conrey: modulus must be positive");
    ell %= r;
    if (ell < 0) ell += r;
    if (r == 1) ell = 1;
    if (r > 1 && std::gcd(ell, r) != 1)
        throw NotCoprimeError("character_from_conrey: gcd(ell, r) != 1");

    Character chi;
    chi.r_ = r;
    chi.ell_ = ell;
    chi.angles_.assign(r, std::nullopt);

    auto fac = factorize(r);
    // per prime power component: angle contribution for residue n
    struct Comp {
        long pk;          // p^e
        long p;
        int e;
        long g = 0;       // generator (odd p)
        long phi = 0;
        long lg_ell = 0;  // dlog of ell (odd p), or (eps, a) pair for 2^e
        long eps_ell = 0, a_ell = 0;
        long pow2_ord = 0;
    };
    std::vector<Comp> comps;
    for (auto& [p, e] : fac) {
        Comp c;
        c.p = p;
        c.e = e;
        c.pk = 1;
        for (int i = 0; i < e; ++i) c.pk *= p;
        if (p == 2) {
            if (e >= 3) {
                c.pow2_ord = c.pk / 4;  // order of 5 mod 2^e
                // ell = (-1)^eps 5^a
                bool found = false;
                for (long eps = 0; eps < 2 && !found; ++eps) {
                    long acc = 1;
                    for (long a2 = 0; a2 < c.pow2_ord; ++a2) {
                        long v = eps ? (c.pk - acc) : acc;
                        if (v % c.pk == ell % c.pk) {
                            c.eps_ell = eps;
                            c.a_ell = a2;
                            found = true;
                            break;
                        }
                        acc = static_cast<long>((__int128)acc * 5 % c.pk);
                    }
                }
                if (!found) throw Error("conrey: 2-adic decomposition failed");
            } else if (e == 2) {
                c.eps_ell = (ell % 4 == 3) ? 1 : 0;
            }
        } else {
            c.g = primitive_root_pk(p);
            c.phi = c.pk / p * (p - 1);
            c.lg_ell = dlog(c.g, ell % c.pk, c.pk, c.phi);
        }
        comps.push_back(c);
    }

    for (long n = 0; n < r; ++n) {
        if (r > 1 && std::gcd(n, r) != 1) continue;
        mpq_class angle(0);
        bool ok = true;
        for (auto& c : comps) {
            long nn = n % c.pk;
            if (c.p == 2) {
                if (c.e == 1) continue;
                if (c.e == 2) {
                    long eps_n = (nn % 4 == 3) ? 1 : 0;
                    angle += mpq_class(c.eps_ell * eps_n, 2);
                } else {
                    long eps_n = -1, a_n = -1;
                    long acc = 1;
                    for (long a2 = 0; a2 < c.pow2_ord && eps_n < 0; ++a2) {
                        if (acc == nn) { eps_n = 0; a_n = a2; }
                        else if (c.pk - acc == nn) { eps_n = 1; a_n = a2; }
                        acc = static_cast<long>((__int128)acc * 5 % c.pk);
                    }
                    if (eps_n < 0) { ok = false; break; }
                    angle += mpq_class(c.eps_ell * eps_n, 2);
                    angle += mpq_class(c.a_ell * a_n, c.pow2_ord);
                }
            } else {
                long lg_n = dlog(c.g, nn, c.pk, c.phi);
                angle += mpq_class(c.lg_ell * lg_n, c.phi);
            }
        }
        if (!ok) continue;
        mpz_class den = angle.get_den();
        mpz_class num = angle.get_num() % den;
        if (num < 0) num += den;
        mpq_class red(num, den);
        red.canonicalize();
        chi.angles_[n] = red;
    }
    if (r == 1) chi.angles_[0] = mpq_class(0);
    chi.finalize();
    return chi;
}

Character parse_character(const std::string& text) {
    if (text.rfind("D=", 0) == 0 || text.rfind("d=", 0) == 0)
        return kronecker_character(std::stol(text.substr(2)));
    auto pos = text.find(':');
    if (pos == std::string::npos) pos = text.find('.');
    if (pos == std::string::npos)
        throw DomainError("parse_character: expected 'r:ell' or 'D=k', got '" + text + "'");
    long r = std::stol(text.substr(0, pos));
    long ell = std::stol(text.substr(pos + 1));
    return character_from_conrey(r, ell);
}

std::pair<long, Character> conductor_and_primitivize(const Character& chi) {
    long D = chi.conductor();
    if (D == chi.modulus()) return {D, chi};
    // the primitive character mod D matching chi on units
    for (long ell = 1; ell <= std::max(1L, D - 1); ++ell) {
        if (D > 1 && std::gcd(ell, D) != 1) continue;
        Character cand = character_from_conrey(D, ell);
        bool match = true;
        for (long n = 0; n < chi.modulus() && match; ++n) {
            if (!chi.is_unit(n)) continue;
            if (!cand.is_unit(n)) { match = false; break; }
            if (chi.angle(n) != cand.angle(n)) match = false;
        }
        if (match && cand.is_primitive()) return {D, cand};
    }
    throw Error("conductor_and_primitivize: inducing character not found");
}

bool is_fundamental_discriminant(long D) {
    if (D == 1) return true;
    if (D == 0) return false;
    auto squarefree = [](long n) {
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long m = D % 4;
    if (m < 0) m += 4;
    if (m == 1) return squarefree(std::abs(D));
    if (m == 0) {
        long d = D / 4;
        long md = d % 4;
        if (md < 0) md += 4;
        if (md != 2 && md != 3) return false;
        return squarefree(std::abs(d));
    }
    return false;
}

int kronecker_symbol(long D, long n) {
    mpz_class a(D), b(n);
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

Character kronecker_character(long D) {
    if (!is_fundamental_discriminant(D))
        throw DomainError("kronecker_character: not a fundamental discriminant");
    long r = std::abs(D);
    if (r == 1) return character_from_conrey(1, 1);
    // find the Conrey label whose value table matches (D/.)
    for (long ell = 1; ell < r; ++ell) {
        if (std::gcd(ell, r) != 1) continue;
        Character cand = character_from_conrey(r, ell);
        if (!cand.is_real()) continue;
        bool match = true;
        for (long n = 1; n < r && match; ++n) {
            int ks = kronecker_symbol(D, n);
            int cv = cand.is_unit(n) ? cand.real_value(n) : 0;
            if (ks != cv) match = false;
        }
        if (match) return cand;
    }
    throw Error("kronecker_character: no matching Conrey character");
}

Complex gauss_sum(const Character& chi, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working_bits());
    const long r = chi.modulus();
    Complex rho;
    Real two_pi = const_pi() * 2L;
    for (long n = 1; n <= r; ++n) {
        if (!chi.is_unit(n)) continue;
        Real t = Real(mpq_class(chi.angle(n) + mpq_class(n, r))) * two_pi;
        Real s, c;
        mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
        rho += Complex(c, s);
    }
    return rho;
}

GaussData gauss_data(const Character& chi, const PrecisionContext& ctx) {
    if (!chi.is_primitive())
        throw DomainError("gauss_data: epsilon defined only for primitive characters");
    PrecisionGuard guard(ctx.working_bits());
    GaussData out;
    out.rho = gauss_sum(chi, ctx);
    out.epsilon = out.rho / (i_pow(chi.parity()) * Complex(sqrt(Real(chi.modulus()))));
    return out;
}

int moebius(long n) {
    if (n < 1) throw DomainError("moebius: n >= 1");
    int omega = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            ++omega;
            if (n % p == 0) return 0;
        }
    }
    if (n > 1) ++omega;
    return omega % 2 == 0 ? 1 : -1;
}

long euler_phi(long n) {
    if (n < 1) throw DomainError("euler_phi: n >= 1");
    long out = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out -= out / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out -= out / n;
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace lseries::chars
