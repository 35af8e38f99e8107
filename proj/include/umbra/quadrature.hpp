#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "umbra/complex.hpp"
#include "umbra/real.hpp"

namespace umbra {

struct QuadResult {
    Real value;
    Real err_estimate;
    bool converged = true;
    long evaluations = 0;
};

struct QuadResultC {
    Complex value;
    Real err_estimate;
    bool converged = true;
    long evaluations = 0;
};

struct QuadOptions {
    Real abs_tol;              // target absolute error
    int max_panels = 6000;
    QuadOptions() : abs_tol(context_eps() * Real(100)) {}
    explicit QuadOptions(Real tol, int panels = 6000) : abs_tol(std::move(tol)), max_panels(panels) {}
};

// Adaptive bisection with nested Gauss-Legendre panels (15/31 nodes);
// the reported error estimate is the sum of per-panel rule differences.
QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const QuadOptions& opt = QuadOptions());

QuadResultC integrate(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                      const QuadOptions& opt = QuadOptions());

// [a, inf) via t = a + u/(1-u)
QuadResult integrate_to_inf(const std::function<Real(const Real&)>& f, const Real& a,
                            const QuadOptions& opt = QuadOptions());

QuadResultC integrate_to_inf(const std::function<Complex(const Real&)>& f, const Real& a,
                             const QuadOptions& opt = QuadOptions());

// ---------------------------------------------------------------------------
// Principal value about t = 1: lim_{eps->0} [ int_0^{1-eps} f + int_{1+eps}^x f ].
// The schedule shrinks eps geometrically; the limit is extrapolated from the
// last three levels assuming v(eps) = v0 + c1 eps + c3 eps^3.
struct PvSchedule {
    Real eps0;
    Real ratio;
    int levels;
    PvSchedule() : eps0(Real(1) / Real(10)), ratio(Real(1) / Real(10)), levels(4) {}
    PvSchedule(Real e0, Real r, int n) : eps0(std::move(e0)), ratio(std::move(r)), levels(n) {}
};

struct PvResult {
    Real value;
    Real err_estimate;
    std::vector<Real> level_values;
};

using PvSideIntegral = std::function<Real(const Real& eps)>;

PvResult principal_value_pair(const PvSideIntegral& left, const PvSideIntegral& right,
                              const Real& tol, const PvSchedule& schedule = PvSchedule());

PvResult principal_value_pair(const std::function<Real(const Real&)>& f, const Real& x,
                              const Real& tol, const PvSchedule& schedule = PvSchedule(),
                              const QuadOptions& opt = QuadOptions());

// ---------------------------------------------------------------------------
// Alternating-series limit by the Cohen-Rodriguez Villegas-Zagier scheme.
// `term` yields the signed k-th term (k from 0); terms must eventually
// alternate with decreasing magnitude.
struct AccelResult {
    Real limit;
    Real err_estimate;
    int terms_used = 0;
};

AccelResult accelerate_alternating(const std::function<Real(int)>& term, int max_terms = 0);

// ---------------------------------------------------------------------------
struct Bracket {
    Real lo, hi;
};

std::vector<Bracket> find_sign_changes(const std::function<Real(const Real&)>& f, const Real& a,
                                       const Real& b, const Real& step);

Real refine_bracket(const std::function<Real(const Real&)>& f, const Bracket& bracket, const Real& tol);

} // namespace umbra
