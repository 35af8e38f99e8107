#pragma once

#include <string>
#include <vector>

#include "umbra/quadrature.hpp"

namespace umbra::xf {

std::vector<long> primes_upto(long n);

// log p when n = p^k, else 0
Real von_mangoldt(long n);

// psi(x) = 1/2 [ sum_{p^k < x} + sum_{p^k <= x} ] log p/(p^k - 1)
Real psi_prime_side(const Real& x);

// one conjugate pair of zeros: PV of
//   int_0^{1-eps} + int_{1+eps}^x  of (t^{rho-1} + t^{-rho})/(t - 1) dt,
// rho = 1/2 + i gamma; real form 2 cos(gamma log t)/(sqrt t (t-1)).
Real zero_pair_term(const Real& gamma_ord, const Real& x, const PvSchedule& schedule = PvSchedule{Real(0), Real(0), 0});

// closed geometric-series form of the same PV limit (independent oracle)
Real zero_pair_term_series(const Real& gamma_ord, const Real& x);

// int_x^inf dt / (t (t-1) (t^2-1)), x > 1
Real tail_integral(const Real& x);

struct LogNegZeta {
    Real value;
    Real tail_bound;
};

// log[-zeta(B)] = -gamma + sum_{n=2}^{N} Lambda(n)/(n(n-1)), with the omitted
// tail bounded explicitly
LogNegZeta log_neg_zeta_b(long cutoff);

// equivalent route -gamma - sum_{n>=2} zeta'(n)/zeta(n)
Real log_neg_zeta_b_zeta_route();

struct ZeroList {
    enum Source { kFile, kInternal };
    std::vector<Real> ordinates;  // strictly increasing, all > 14
    Source source = kInternal;
    int count() const { return static_cast<int>(ordinates.size()); }
};

// ASCII file: one ascending positive decimal ordinate per line, '#' comments
// and blank lines permitted
ZeroList load_zeros(const std::string& path);
std::string format_zeros(const ZeroList& zeros);

// ordinates of the first `count` zeros of Xi(t) = xi_complete(1/2 + it),
// scanned with the given step and refined to 1e-6
ZeroList compute_zeros(int count, const Real& step = Real::ratio(1, 5));

struct PsiComparison {
    Real x;
    Real prime_side;
    Real explicit_side;
    int zeros_used = 0;
    Real difference;
    // per-term breakdown of the explicit side
    Real term_log;
    Real term_zero_sum;
    Real term_tail;
    Real term_const;
    Real const_tail_bound;
};

PsiComparison psi_explicit_side(const Real& x, const ZeroList& zeros, int K);

} // namespace umbra::xf
