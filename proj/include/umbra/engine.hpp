#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "umbra/oracles.hpp"

namespace umbra::engine {

// ---------------------------------------------------------------------------
// Moment table: the only place a bare umbral symbol becomes a number.
//   B^n -> B_n (n >= 0), B^{-k} -> k zeta(k+1), log B -> -gamma,
//   B log B -> (1 - log 2pi)/2.
struct Symbol {
    enum Kind { kPower, kLogB, kBLogB } kind = kPower;
    long exponent = 0;

    static Symbol power(long n) { return {kPower, n}; }
    static Symbol log_b() { return {kLogB, 0}; }
    static Symbol b_log_b() { return {kBLogB, 0}; }
};

Real moment_value(const Symbol& symbol);

// sum_n c_n * moment(B^n); the expression must arrive fully expanded, moments
// are substituted exactly once. Exponents may be negative (tabled values).
Complex umbral_polynomial(const std::map<long, Complex>& coeffs);

// exact-rational variant over nonnegative powers, for identities that hold
// exactly (reflection, argument-shift lemmas)
mpq_class umbral_polynomial_exact(const std::map<long, mpq_class>& coeffs);

// expand f(a + B z) for a polynomial f (ascending rational coefficients) into
// powers of B, exactly
std::map<long, mpq_class> expand_poly_shift(const std::vector<mpq_class>& f, const mpq_class& a,
                                            const mpq_class& z);

// ---------------------------------------------------------------------------

enum class Method { kDirectSum, kShiftedEM, kAlternatingAccel, kMomentSeries };
enum class ConvergenceClass { kConvergent, kAsymptotic };

const char* method_name(Method m);
const char* class_name(ConvergenceClass c);

struct UmbralResult {
    Complex value;
    Real error_estimate;
    int shift_n = 0;
    int trunc_m = 0;
    Method method = Method::kShiftedEM;
    ConvergenceClass convergence = ConvergenceClass::kConvergent;
};

struct EngineConfig {
    int shift_n = -1;   // -1: auto = max(10, context digits)
    int trunc_m = -1;   // -1: optimal truncation
    bool allow_moment_series = true;
};

// f(B + a) by the Ramanujan rule: the shifted Euler-Maclaurin form
//   sum_{m<=M} f^(m)(N+a) B_m/m!  -  sum_{k=1}^N f'(k+a),
// with direct-sum/alternating/moment-series selection as the lattice behavior
// dictates.
UmbralResult ramanujan_sum(const Oracle& oracle, const Complex& a, const EngineConfig& cfg = {});

// Taylor-moment route: sum_m f^(m)(a) B_m / m!, optimally truncated. Used for
// expressions whose lattice sum is invalid but whose moment series converges.
UmbralResult moment_series(const Oracle& oracle, const Complex& a, const EngineConfig& cfg = {});

} // namespace umbra::engine
