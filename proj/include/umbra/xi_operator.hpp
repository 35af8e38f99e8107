#pragma once

#include <vector>

#include "umbra/quadrature.hpp"

namespace umbra::xi {

enum class KernelFlavor { kPlain, kSinWeighted };

// D(x) = d/dx [x^{3/2} psi_theta'(x)]
Real theta_d(const Real& x);

// D(x) * k(x) with k = log x/(sqrt x - 1) (plain) or 2 pi/(sqrt x + 1)
// (sin-weighted); continuous limit at x = 1.
Real phi_kernel(const Real& x, KernelFlavor flavor = KernelFlavor::kPlain);

// xi(B+s) = integral_1^inf phi(x) (x^{s/2} + x^{-s/2}) dx, truncated where the
// integrand falls below the tolerance. Symmetric in s <-> -s.
Complex xi_b(const Complex& s, KernelFlavor flavor = KernelFlavor::kPlain, const Real& quad_tol = Real(0));

// real value of xi(B+it): the integrand reduces to 2 phi(x) cos((t/2) log x)
Real xi_b_imag_axis(const Real& t, KernelFlavor flavor = KernelFlavor::kPlain, const Real& quad_tol = Real(0));

// ordinates of sign changes of t -> xi(B+it) on (0, t_max], refined by
// bisection; empty when the step is too coarse to bracket any
std::vector<Real> scan_xi_zeros(const Real& t_max, const Real& step,
                                KernelFlavor flavor = KernelFlavor::kPlain,
                                const Real& quad_tol = Real(0), const Real& refine_tol = ldexp10(-6));

// C_n = 1/(pi n!) * int_{-T}^{T} xi(B+it) t^n dt, T grown until the tail is
// below tol; n <= 4. Throws kNoConvergence when the tail will not shrink.
Real moment_c(int n, const Real& tol = ldexp10(-6));

} // namespace umbra::xi
