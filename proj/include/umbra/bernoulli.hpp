#pragma once

#include <gmpxx.h>

#include <vector>

#include "umbra/real.hpp"

namespace umbra {

// Exact Bernoulli numbers in the plus convention (B1 = +1/2), built once by
// the Akiyama-Tanigawa recurrence and immutable afterwards.
class BernoulliTable {
public:
    static constexpr int kDefaultCap = 256;

    explicit BernoulliTable(int cap = kDefaultCap);

    int cap() const { return cap_; }

    // exact rational, lowest terms
    const mpq_class& rational(int n) const;

    // rational(n) rounded once to context precision
    Real moment(int n) const;

    // global table at the default cap
    static const BernoulliTable& shared();

private:
    int cap_;
    std::vector<mpq_class> b_;
};

// B_n(x) with exact rational coefficients; evaluation at context precision.
// periodic=true evaluates the 1-periodic extension B_n(x - floor(x)).
class BernoulliPolynomial {
public:
    BernoulliPolynomial(int n, const BernoulliTable& table = BernoulliTable::shared());

    int degree() const { return n_; }
    const std::vector<mpq_class>& coefficients() const { return coeff_; }  // ascending powers

    Real operator()(const Real& x, bool periodic = false) const;
    mpq_class at_rational(const mpq_class& x) const;

private:
    int n_;
    std::vector<mpq_class> coeff_;
};

Real to_real(const mpq_class& q);

} // namespace umbra
