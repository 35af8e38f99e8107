#pragma once

#include <vector>

#include "umbra/complex.hpp"

namespace umbra {

// Truncated Taylor data at a point: c[m] = f^(m)(a)/m!, m = 0..order.
// Arithmetic is closed under a fixed (point, order).
class Jet {
public:
    Jet() = default;
    Jet(Complex point, int order) : a_(std::move(point)), c_(order + 1) {}
    Jet(Complex point, std::vector<Complex> coeffs) : a_(std::move(point)), c_(std::move(coeffs)) {}

    const Complex& point() const { return a_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Complex& operator[](int m) const { return c_[m]; }
    Complex& operator[](int m) { return c_[m]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    // m! * c_m
    Complex derivative(int m) const;

    static Jet constant(const Complex& value, const Complex& point, int order);
    static Jet variable(const Complex& point, int order);  // f(x) = x

private:
    Complex a_;
    std::vector<Complex> c_;
};

// All operands must share (point, order).
Jet operator+(const Jet& x, const Jet& y);
Jet operator-(const Jet& x, const Jet& y);
Jet operator*(const Jet& x, const Jet& y);
Jet operator/(const Jet& x, const Jet& y);   // requires y[0] != 0
Jet operator*(const Jet& x, const Complex& s);
Jet operator+(const Jet& x, const Complex& s);

Jet jet_exp(const Jet& x);
Jet jet_log(const Jet& x);                   // principal branch of log at x[0]
Jet jet_sin(const Jet& x);
Jet jet_cos(const Jet& x);
Jet jet_pow(const Jet& x, const Complex& alpha);   // x[0] must avoid the branch cut
Jet jet_sqrt(const Jet& x);

} // namespace umbra
