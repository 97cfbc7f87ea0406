#pragma once

#include <string>

#include "lseries/real.hpp"

namespace lseries {

// Complex value over Real. Principal branches throughout: log on C minus
// (-inf,0], z^s = exp(s log z).
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)) {}
    explicit Complex(long n) : re(n) {}
    explicit Complex(const mpq_class& q) : re(q) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_real() const { return im.is_zero(); }

    Complex conj() const { return Complex(re, -im); }
    Complex operator-() const { return Complex(-re, -im); }

    std::string str(long digits = 0) const;
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b);

inline Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator+(const Real& a, const Complex& b) { return b + a; }
inline Complex operator-(const Real& a, const Complex& b) { return {a - b.re, -b.im}; }
inline Complex operator*(const Real& a, const Complex& b) { return b * a; }
inline Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
inline Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
inline Complex operator+(long a, const Complex& b) { return b + a; }
inline Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
inline Complex operator*(long a, const Complex& b) { return b * a; }
Complex operator/(long a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);

inline Complex& operator+=(Complex& a, const Complex& b) { a.re += b.re; a.im += b.im; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a.re -= b.re; a.im -= b.im; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

inline Complex i_unit() { return Complex(Real(0L), Real(1L)); }

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z);
Complex log(const Complex& z);      // principal
Complex sqrt(const Complex& z);     // principal
Complex pow(const Complex& z, const Complex& s);
Complex pow(const Complex& z, const Real& s);
Complex pow(const Complex& z, long n);   // exact integer power (no branch issues)
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex cot(const Complex& z);

// e^{i pi k/2} for integer k (exact)
Complex i_pow(long k);

// magnitude exponent: max of component exp2
inline long exp2_mag(const Complex& z) {
    long a = z.re.exp2(), b = z.im.exp2();
    return a > b ? a : b;
}

} // namespace lseries
