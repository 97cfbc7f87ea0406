#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lseries/complex.hpp"
#include "lseries/precision.hpp"

namespace lseries::chars {

// Dirichlet character mod r with LMFDB-Conrey label. Values are stored as
// exact angles: chi(a) = e^{2 pi i angle[a]}, angle in lowest terms in [0,1),
// or no value when gcd(a,r) > 1.
class Character {
public:
    Character() = default;

    long modulus() const { return r_; }
    long conrey() const { return ell_; }
    int parity() const { return kappa_; }       // chi(-1) = (-1)^kappa
    long conductor() const { return conductor_; }
    long order() const { return order_; }

    bool is_trivial() const { return r_ == 1; }
    bool is_principal() const { return ell_ == 1 || r_ == 1; }
    bool is_primitive() const { return conductor_ == r_; }
    bool is_real() const { return order_ <= 2; }
    bool is_even() const { return kappa_ == 0; }
    bool is_odd() const { return kappa_ == 1; }

    bool is_unit(long n) const;
    // exact angle of chi(n) as a fraction of a full turn; n may be any integer
    mpq_class angle(long n) const;
    // chi(n) in {-1,0,1} for real characters
    int real_value(long n) const;
    // chi(n) at working precision
    Complex value(long n) const;

    Character conjugate() const;
    // pointwise product (same modulus)
    Character times(const Character& other) const;

    std::string label() const;  // "r:ell"

    bool operator==(const Character& o) const { return r_ == o.r_ && ell_ == o.ell_; }

    friend Character character_from_conrey(long r, long ell);

private:
    long r_ = 1;
    long ell_ = 1;
    int kappa_ = 0;
    long conductor_ = 1;
    long order_ = 1;
    std::vector<std::optional<mpq_class>> angles_;  // index = residue 0..r-1

    void finalize();  // computes kappa, conductor, order from angles_
};

struct GaussData {
    Complex rho;      // Gauss sum
    Complex epsilon;  // rho / (i^kappa sqrt r), primitive characters only
};

Character character_from_conrey(long r, long ell);
Character parse_character(const std::string& text);  // "r:ell" or "D=..."

// conductor D and the inducing primitive character mod D
std::pair<long, Character> conductor_and_primitivize(const Character& chi);

bool is_fundamental_discriminant(long D);
Character kronecker_character(long D);

// rho(chi), defined for every character
Complex gauss_sum(const Character& chi, const PrecisionContext& ctx);
// rho and epsilon; primitive characters only
GaussData gauss_data(const Character& chi, const PrecisionContext& ctx);

int moebius(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);
int kronecker_symbol(long D, long n);

} // namespace lseries::chars
