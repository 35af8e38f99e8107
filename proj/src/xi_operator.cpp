#include "umbra/xi_operator.hpp"

#include <map>
#include <string>

#include "umbra/special.hpp"

namespace umbra::xi {

namespace {

Real default_tol() { return ldexp10(-(Context::digits() - 4)); }

// integration cutoff: phi(x) ~ pi^2 x^{5/2} e^{-pi x} * k(x); solve
// pi X - (2.5 + |Re s|/2) log X = (digits + 8) log 10 by two fixed-point steps
Real upper_cutoff(const Real& sigma_abs, const Real& tol) {
    Real pi = Real::pi();
    Real rhs = -log(tol * ldexp10(-8));
    Real x(20);
    for (int i = 0; i < 3; ++i) {
        Real lx = log(x);
        x = (rhs + (Real::ratio(5, 2) + sigma_abs / Real(2)) * lx) / pi;
        if (x < Real(12)) x = Real(12);
    }
    return x + Real(2);
}

} // namespace

Real theta_d(const Real& x) {
    Real sx = sqrt(x);
    return Real::ratio(3, 2) * sx * sf::theta_psi(x, 1) + x * sx * sf::theta_psi(x, 2);
}

Real phi_kernel(const Real& x, KernelFlavor flavor) {
    if (x < Real(1))
        throw Error(Error::kDomain, "phi_kernel requires x >= 1");
    Real k;
    if (flavor == KernelFlavor::kPlain) {
        Real u = sqrt(x) - Real(1);
        if (u < ldexp10(-(Context::digits() / 2))) {
            // log x/(sqrt x - 1) = 2(1 - u/2 + u^2/3 - ...)
            k = Real(2) * (Real(1) - u / Real(2) + u * u / Real(3) - u * u * u / Real(4));
        } else {
            k = log(x) / u;
        }
    } else {
        k = Real(2) * Real::pi() / (sqrt(x) + Real(1));
    }
    return theta_d(x) * k;
}

Complex xi_b(const Complex& s, KernelFlavor flavor, const Real& quad_tol) {
    Real tol = quad_tol.is_zero() ? default_tol() : quad_tol;
    Real cutoff = upper_cutoff(abs(s.re), tol);
    Complex half_s = s * Complex(Real::ratio(1, 2));
    auto f = [&](const Real& x) -> Complex {
        Complex lx(log(x));
        Complex p = exp(half_s * lx);
        Complex q = exp(-half_s * lx);
        return (p + q) * Complex(phi_kernel(x, flavor));
    };
    auto res = integrate(std::function<Complex(const Real&)>(f), Real(1), cutoff, QuadOptions(tol));
    if (!res.converged)
        throw Error(Error::kNoConvergence, "xi_b quadrature exhausted subdivision budget");
    return res.value;
}

Real xi_b_imag_axis(const Real& t, KernelFlavor flavor, const Real& quad_tol) {
    Real tol = quad_tol.is_zero() ? default_tol() : quad_tol;
    Real cutoff = upper_cutoff(Real(0), tol);
    auto f = [&](const Real& x) -> Real {
        return Real(2) * phi_kernel(x, flavor) * cos(t / Real(2) * log(x));
    };
    auto res = integrate(std::function<Real(const Real&)>(f), Real(1), cutoff, QuadOptions(tol));
    if (!res.converged)
        throw Error(Error::kNoConvergence, "xi_b quadrature exhausted subdivision budget");
    return res.value;
}

std::vector<Real> scan_xi_zeros(const Real& t_max, const Real& step, KernelFlavor flavor,
                                const Real& quad_tol, const Real& refine_tol) {
    if (!(step > Real(0)) || !(t_max > Real(0)))
        throw Error(Error::kBadInput, "scan_xi_zeros requires positive step and t_max");
    Real tol = quad_tol.is_zero() ? default_tol() : quad_tol;
    auto f = [&](const Real& t) { return xi_b_imag_axis(t, flavor, tol); };
    Real start = min(step, Real::ratio(1, 100));
    auto brackets = find_sign_changes(f, start, t_max, step);
    std::vector<Real> out;
    out.reserve(brackets.size());
    for (const auto& b : brackets) out.push_back(refine_bracket(f, b, refine_tol));
    return out;
}

Real moment_c(int n, const Real& tol) {
    if (n < 0 || n > 4)
        throw Error(Error::kBadInput, "moment_c supports n in [0, 4]");
    Real quad_tol = tol * ldexp10(-4);
    // xi(B+it) is even in t; mirrored quadrature nodes reuse cached values
    std::map<std::string, Real> cache;
    auto xi_line = [&](const Real& t) {
        Real at = abs(t);
        char* key_c = nullptr;
        mpfr_asprintf(&key_c, "%Ra", at.raw());
        std::string key(key_c);
        mpfr_free_str(key_c);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Real v = xi_b_imag_axis(at, KernelFlavor::kPlain, quad_tol);
        cache.emplace(std::move(key), v);
        return v;
    };
    auto f = [&](const Real& t) -> Real {
        Real w = xi_line(t);
        return w * pow_si(t, n);
    };
    Real pi = Real::pi();
    Real T(10);
    Real total(0);
    Real prev_chunk = Real::inf();
    // grow T in bands until the band contribution bound is small
    Real lo(0);
    int bands = 0;
    while (true) {
        auto band = integrate(std::function<Real(const Real&)>(f), lo, T, QuadOptions(quad_tol));
        auto band_neg = integrate(std::function<Real(const Real&)>(f), -T, -lo, QuadOptions(quad_tol));
        total += band.value + band_neg.value;
        Real edge = abs(xi_line(T)) * pow_si(T, n) * T;  // crude tail proxy
        if (edge < tol / Real(10)) break;
        if (++bands > 12 || (edge > prev_chunk && bands > 4))
            throw Error(Error::kNoConvergence, "moment_c tail does not shrink for n = " + std::to_string(n));
        prev_chunk = edge;
        lo = T;
        T = T + Real(15);
    }
    Real fact(1);
    for (int i = 2; i <= n; ++i) fact *= Real(i);
    return total / (pi * fact);
}

} // namespace umbra::xi
