#include "umbra/bernoulli.hpp"

#include <string>

namespace umbra {

Real to_real(const mpq_class& q) {
    Real out;
    mpfr_set_q(out.raw(), q.get_mpq_t(), MPFR_RNDN);
    return out;
}

BernoulliTable::BernoulliTable(int cap) : cap_(cap), b_(cap + 1) {
    // Akiyama-Tanigawa: row-reduce a[j] = 1/(j+1); yields B_m with B1 = +1/2.
    std::vector<mpq_class> a(cap + 1);
    for (int m = 0; m <= cap; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
        }
        b_[m] = a[0];
        b_[m].canonicalize();
    }
}

const mpq_class& BernoulliTable::rational(int n) const {
    if (n < 0 || n > cap_)
        throw Error(Error::kCapacity,
                    "Bernoulli index " + std::to_string(n) + " above table cap " + std::to_string(cap_));
    return b_[n];
}

Real BernoulliTable::moment(int n) const { return to_real(rational(n)); }

const BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable table(kDefaultCap);
    return table;
}

BernoulliPolynomial::BernoulliPolynomial(int n, const BernoulliTable& table) : n_(n), coeff_(n + 1) {
    // B_n(x) = sum_k C(n,k) B^-_k x^{n-k}, with B^-_k = (-1)^k B^+_k
    mpz_class binom = 1;
    for (int k = 0; k <= n; ++k) {
        mpq_class bk = table.rational(k);
        if (k % 2 == 1) bk = -bk;
        coeff_[n - k] = bk * binom;
        binom *= (n - k);
        binom /= (k + 1);
    }
}

Real BernoulliPolynomial::operator()(const Real& x, bool periodic) const {
    Real t = x;
    if (periodic) t -= floor(x);
    Real acc(0L);
    for (int i = n_; i >= 0; --i) {
        acc *= t;
        acc += to_real(coeff_[i]);
    }
    return acc;
}

mpq_class BernoulliPolynomial::at_rational(const mpq_class& x) const {
    mpq_class acc = 0;
    for (int i = n_; i >= 0; --i) {
        acc *= x;
        acc += coeff_[i];
    }
    acc.canonicalize();
    return acc;
}

} // namespace umbra
