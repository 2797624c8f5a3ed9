#pragma once

#include "qasym/real.hpp"

namespace qasym {

// Rectangular complex number over Real. Used sparingly: most of the library
// runs on the real axis and promotes only where a formula genuinely needs
// complex values (complex s, theta phases).
class Complex {
public:
    Real re, im;

    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(re.prec()) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_real() const { return im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
    friend Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
    friend Complex operator+(const Real& b, const Complex& a) { return a + b; }
    friend Complex operator-(const Real& b, const Complex& a) { return {b - a.re, -a.im}; }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    Complex& round_to(mpfr_prec_t prec) {
        re.round_to(prec);
        im.round_to(prec);
        return *this;
    }
};

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch.
inline Complex log(const Complex& z) { return {log(abs(z)), atan2(z.im, z.re)}; }

inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}
inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// Integer power by binary exponentiation; n may be negative.
inline Complex pow(const Complex& z, long n) {
    mpfr_prec_t p = z.prec();
    if (n == 0) return Complex(1, p);
    Complex base = z;
    bool invert = n < 0;
    unsigned long e = invert ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Complex acc(1, p);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (invert) return Complex(1, p) / acc;
    return acc;
}

// b^e for real b > 0 and complex e.
inline Complex pow(const Real& b, const Complex& e) {
    if (e.is_real()) return Complex(pow(b, e.re));
    Real lb = log(b);
    return exp(Complex(e.re * lb, e.im * lb));
}

}  // namespace qasym
