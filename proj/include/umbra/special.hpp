#pragma once

#include <vector>

#include "umbra/jets.hpp"

namespace umbra::sf {

// Riemann zeta by Euler-Maclaurin continuation (never the functional
// equation). Jets are expansions in s about s0.
Jet zeta_jet(const Complex& s0, int order);
Complex zeta(const Complex& s, int order = 0);  // order=1 returns zeta'

// (s-1)*zeta(s): entire; the pole term of the EM representation is explicit,
// so no cancellation occurs near s = 1.
Jet zeta1_jet(const Complex& s0, int order);
Complex zeta1(const Complex& s);

Jet hurwitz_zeta_jet(const Complex& s0, const Real& alpha, int order);
Complex hurwitz_zeta(const Complex& s, const Real& alpha);

struct DirichletCharacter {
    int modulus = 1;
    std::vector<Complex> values;  // chi(1..k)
    bool principal = false;

    static DirichletCharacter principal_mod1();
    static DirichletCharacter nonprincipal_mod4();
    static DirichletCharacter from_table(int modulus, std::vector<Complex> values);

    const Complex& at(long r) const;  // chi(r), 1-periodic reduction
    void validate() const;            // zero pattern + multiplicativity
};

Complex dirichlet_l(const Complex& s, const DirichletCharacter& chi);

// log Pi(s) = log Gamma(s+1), principal branch on the real axis, Stirling
// tail plus downward recurrence elsewhere.
Complex log_gamma_pi(const Complex& s);
// jet of x -> log Pi(scale*x + offset) at x = p
Jet log_gamma_pi_jet(const Complex& p, int order, const Complex& scale, const Complex& offset);

Complex digamma_pi(const Complex& s);  // Pi'(s)/Pi(s) = psi(s+1)
// jet of x -> Pi'/Pi(scale*x + offset) at x = p
Jet digamma_pi_jet(const Complex& p, int order, const Complex& scale, const Complex& offset);

// psi_theta(x) = sum_{n>=1} exp(-n^2 pi x); deriv in {0,1,2} differentiates termwise
Real theta_psi(const Real& x, int deriv = 0);

// xi(s) = Pi(s/2) pi^{-s/2} (s-1) zeta(s); entire, xi(s) = xi(1-s)
Complex xi_complete(const Complex& s);
Jet xi_complete_jet(const Complex& s0, int order);

} // namespace umbra::sf
