#pragma once

#include <string>

#include "umbra/real.hpp"

namespace umbra {

// Complex value as a pair of context-precision reals.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r) {}
    Complex(int r) : re(r) {}
    Complex(double r) : re(r) {}

    bool is_real(const Real& tol) const { return abs(im) <= tol; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        Real i = re * o.im + im * o.re;
        re = std::move(r); im = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        Real i = (im * o.re - re * o.im) / d;
        re = std::move(r); im = std::move(i);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
    friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
    friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
    friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
    friend Complex operator-(Complex a) { a.re = -a.re; a.im = -a.im; return a; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    std::string str(int digits = 0) const;
};

inline Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Complex conj(Complex z) { z.im = -z.im; return z; }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// principal branch
inline Complex log(const Complex& z) {
    return {log(abs(z)), atan2(z.im, z.re)};
}

inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re));
    Real m = sqrt(abs(z));
    Real a = atan2(z.im, z.re) / Real(2);
    return {m * cos(a), m * sin(a)};
}

inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

inline Complex pow(const Complex& b, const Complex& e) {
    if (b.im.is_zero() && e.im.is_zero() && b.re.sign() > 0) return Complex(pow(b.re, e.re));
    return exp(e * log(b));
}

// b^n for machine integer n (exact repeated squaring)
inline Complex pow_si(Complex b, long n) {
    if (n == 0) return Complex(Real(1L));
    bool inv = n < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex acc(Real(1L));
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return inv ? Complex(Real(1L)) / acc : acc;
}

} // namespace umbra
