#include "umbra/jets.hpp"

#include <string>

namespace umbra {

namespace {
void require_compatible(const Jet& x, const Jet& y) {
    if (x.order() != y.order() || !(abs(x.point() - y.point()).is_zero()))
        throw Error(Error::kBadInput, "jet operands differ in point or order");
}
} // namespace

Complex Jet::derivative(int m) const {
    if (m < 0 || m > order())
        throw Error(Error::kBadInput, "jet derivative order " + std::to_string(m) +
                                          " outside stored order " + std::to_string(order()));
    Complex fact(Real(1L));
    for (int i = 2; i <= m; ++i) fact *= Complex(Real(static_cast<long>(i)));
    return c_[m] * fact;
}

Jet Jet::constant(const Complex& value, const Complex& point, int order) {
    Jet j(point, order);
    j[0] = value;
    return j;
}

Jet Jet::variable(const Complex& point, int order) {
    Jet j(point, order);
    j[0] = point;
    if (order >= 1) j[1] = Complex(Real(1L));
    return j;
}

Jet operator+(const Jet& x, const Jet& y) {
    require_compatible(x, y);
    Jet r = x;
    for (int m = 0; m <= r.order(); ++m) r[m] += y[m];
    return r;
}

Jet operator-(const Jet& x, const Jet& y) {
    require_compatible(x, y);
    Jet r = x;
    for (int m = 0; m <= r.order(); ++m) r[m] -= y[m];
    return r;
}

Jet operator*(const Jet& x, const Jet& y) {
    require_compatible(x, y);
    Jet r(x.point(), x.order());
    for (int m = 0; m <= x.order(); ++m) {
        Complex acc;
        for (int i = 0; i <= m; ++i) acc += x[i] * y[m - i];
        r[m] = acc;
    }
    return r;
}

Jet operator/(const Jet& x, const Jet& y) {
    require_compatible(x, y);
    if (abs(y[0]).is_zero())
        throw Error(Error::kDomain, "jet division by series with zero constant term");
    Jet q(x.point(), x.order());
    for (int m = 0; m <= x.order(); ++m) {
        Complex acc = x[m];
        for (int i = 0; i < m; ++i) acc -= q[i] * y[m - i];
        q[m] = acc / y[0];
    }
    return q;
}

Jet operator*(const Jet& x, const Complex& s) {
    Jet r = x;
    for (int m = 0; m <= r.order(); ++m) r[m] *= s;
    return r;
}

Jet operator+(const Jet& x, const Complex& s) {
    Jet r = x;
    r[0] += s;
    return r;
}

Jet jet_exp(const Jet& x) {
    Jet e(x.point(), x.order());
    e[0] = exp(x[0]);
    for (int m = 1; m <= x.order(); ++m) {
        Complex acc;
        for (int i = 1; i <= m; ++i) acc += Complex(Real(static_cast<long>(i))) * x[i] * e[m - i];
        e[m] = acc / Complex(Real(static_cast<long>(m)));
    }
    return e;
}

Jet jet_log(const Jet& x) {
    if (abs(x[0]).is_zero())
        throw Error(Error::kDomain, "jet log of series with zero constant term");
    Jet l(x.point(), x.order());
    l[0] = log(x[0]);
    if (x.order() == 0) return l;
    // l' = x'/x
    Jet xd(x.point(), x.order() - 1);
    for (int m = 0; m < x.order(); ++m) xd[m] = x[m + 1] * Complex(Real(static_cast<long>(m + 1)));
    Jet xt(x.point(), x.order() - 1);
    for (int m = 0; m < x.order(); ++m) xt[m] = x[m];
    Jet r = xd / xt;
    for (int m = 1; m <= x.order(); ++m) l[m] = r[m - 1] / Complex(Real(static_cast<long>(m)));
    return l;
}

Jet jet_sin(const Jet& x) {
    Jet s(x.point(), x.order());
    Jet c(x.point(), x.order());
    s[0] = sin(x[0]);
    c[0] = cos(x[0]);
    for (int m = 1; m <= x.order(); ++m) {
        Complex sa, ca;
        for (int i = 1; i <= m; ++i) {
            Complex k(Real(static_cast<long>(i)));
            sa += k * x[i] * c[m - i];
            ca += k * x[i] * s[m - i];
        }
        Complex inv_m(Real(static_cast<long>(m)));
        s[m] = sa / inv_m;
        c[m] = -ca / inv_m;
    }
    return s;
}

Jet jet_cos(const Jet& x) {
    Jet s(x.point(), x.order());
    Jet c(x.point(), x.order());
    s[0] = sin(x[0]);
    c[0] = cos(x[0]);
    for (int m = 1; m <= x.order(); ++m) {
        Complex sa, ca;
        for (int i = 1; i <= m; ++i) {
            Complex k(Real(static_cast<long>(i)));
            sa += k * x[i] * c[m - i];
            ca += k * x[i] * s[m - i];
        }
        Complex inv_m(Real(static_cast<long>(m)));
        s[m] = sa / inv_m;
        c[m] = -ca / inv_m;
    }
    return c;
}

Jet jet_pow(const Jet& x, const Complex& alpha) {
    if (abs(x[0]).is_zero())
        throw Error(Error::kDomain, "jet pow of series with zero constant term");
    return jet_exp(jet_log(x) * alpha);
}

Jet jet_sqrt(const Jet& x) { return jet_pow(x, Complex(Real::ratio(1, 2))); }

} // namespace umbra
