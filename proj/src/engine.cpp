#include "umbra/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "umbra/bernoulli.hpp"
#include "umbra/special.hpp"

namespace umbra::engine {

namespace {

Real negative_power_moment(long k) {
    // B^{-k} = k zeta(k+1)
    return Real(k) * sf::zeta(Complex(Real(k + 1))).re;
}

struct TailScan {
    Complex sum;
    Real err;
    int used_m = 0;
    bool converged = false;       // term magnitude reached the eps floor
    bool found_min = false;       // stopped at an asymptotic minimum
    bool diverged_early = false;  // growth before any useful decay
    bool hit_cap = false;         // ran out of jet order while still shrinking
};

// accumulate jet[m] * B_m over m = 0,1,2,4,6,...; stop at the eps floor or
// just before the first growing term (optimal truncation)
TailScan scan_bernoulli_tail(const Jet& jet, const Real& eps_stop, int forced_m) {
    const auto& bern = BernoulliTable::shared();
    TailScan out;
    int cap = std::min(jet.order(), bern.cap());
    Real prev = Real::inf();
    for (int m = 0; m <= cap; m = (m < 2) ? m + 1 : m + 2) {
        Complex term = jet[m] * Complex(bern.moment(m));
        Real mag = abs(term);
        if (forced_m >= 0) {
            out.sum += term;
            out.used_m = m;
            if (m >= forced_m) {
                out.err = mag;
                out.converged = true;
                return out;
            }
            continue;
        }
        if (m >= 6 && mag > prev) {
            out.err = mag;
            out.found_min = true;
            out.diverged_early = m <= 10 && mag > max(Real(1), abs(out.sum));
            return out;
        }
        out.sum += term;
        out.used_m = m;
        prev = mag;
        if (m >= 2 && mag < eps_stop) {
            out.err = mag;
            out.converged = true;
            return out;
        }
    }
    out.err = prev;
    out.found_min = true;
    out.hit_cap = jet.order() < bern.cap();
    return out;
}

bool probe_alternating(const std::vector<Complex>& d, const Real& tol) {
    // strict sign alternation with non-increasing magnitude over the window
    if (d.size() < 6) return false;
    for (const auto& v : d)
        if (abs(v.im) > tol) return false;
    for (size_t k = 1; k + 1 < d.size(); ++k) {
        if (d[k].re.is_zero() || d[k + 1].re.is_zero()) return false;
        if (d[k].re.sign() == d[k + 1].re.sign()) return false;
        if (abs(d[k + 1].re) > abs(d[k].re) * (Real(1) + ldexp10(-4))) return false;
    }
    return true;
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::kDirectSum: return "direct-sum";
        case Method::kShiftedEM: return "shifted-EM";
        case Method::kAlternatingAccel: return "alternating-accel";
        case Method::kMomentSeries: return "moment-series";
    }
    return "?";
}

const char* class_name(ConvergenceClass c) {
    return c == ConvergenceClass::kConvergent ? "convergent" : "asymptotic-optimal-truncation";
}

Real moment_value(const Symbol& symbol) {
    switch (symbol.kind) {
        case Symbol::kLogB:
            return -Real::euler_gamma();
        case Symbol::kBLogB:
            return (Real(1) - log(Real(2) * Real::pi())) / Real(2);
        case Symbol::kPower:
            if (symbol.exponent >= 0) return BernoulliTable::shared().moment(static_cast<int>(symbol.exponent));
            return negative_power_moment(-symbol.exponent);
    }
    throw Error(Error::kUnknownSymbol, "umbral symbol not tabled");
}

Complex umbral_polynomial(const std::map<long, Complex>& coeffs) {
    Complex acc;
    for (const auto& [n, c] : coeffs) {
        if (n >= 0 && n > BernoulliTable::shared().cap())
            throw Error(Error::kCapacity, "umbral exponent " + std::to_string(n) + " above Bernoulli cap");
        acc += c * Complex(moment_value(Symbol::power(n)));
    }
    return acc;
}

mpq_class umbral_polynomial_exact(const std::map<long, mpq_class>& coeffs) {
    const auto& bern = BernoulliTable::shared();
    mpq_class acc = 0;
    for (const auto& [n, c] : coeffs) {
        if (n < 0)
            throw Error(Error::kUnknownSymbol, "exact umbral evaluation covers nonnegative powers only");
        acc += c * bern.rational(static_cast<int>(n));
    }
    acc.canonicalize();
    return acc;
}

std::map<long, mpq_class> expand_poly_shift(const std::vector<mpq_class>& f, const mpq_class& a,
                                            const mpq_class& z) {
    // f(a + Bz) = sum_j f_j sum_{i<=j} C(j,i) a^{j-i} (z B)^i
    std::map<long, mpq_class> out;
    for (size_t j = 0; j < f.size(); ++j) {
        if (f[j] == 0) continue;
        mpq_class binom = 1;  // C(j, i)
        for (size_t i = 0; i <= j; ++i) {
            mpq_class zp = 1;
            for (size_t t = 0; t < i; ++t) zp *= z;
            mpq_class ap = 1;
            for (size_t t = 0; t < j - i; ++t) ap *= a;
            out[static_cast<long>(i)] += f[j] * binom * zp * ap;
            binom *= static_cast<long>(j - i);
            binom /= static_cast<long>(i + 1);
        }
    }
    for (auto& [k, v] : out) v.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------

UmbralResult moment_series(const Oracle& oracle, const Complex& a, const EngineConfig& cfg) {
    const int cap = BernoulliTable::shared().cap() - 2;
    int order = cfg.trunc_m > 0 ? cfg.trunc_m : std::min(cap, 2 * Context::digits() + 20);
    Jet j = oracle.jet(a, order);
    Real eps_stop = ldexp10(-(Context::digits() + 5)) * max(Real(1), abs(j[0]));
    TailScan scan = scan_bernoulli_tail(j, eps_stop, cfg.trunc_m);
    while (cfg.trunc_m <= 0 && scan.hit_cap && order < cap) {
        order = std::min(cap, 2 * order);
        j = oracle.jet(a, order);
        scan = scan_bernoulli_tail(j, eps_stop, cfg.trunc_m);
    }
    if (scan.diverged_early)
        throw Error(Error::kNoConvergence,
                    oracle.name() + ": moment series diverges from the first terms at a = " + a.str(8));
    UmbralResult out;
    out.value = scan.sum;
    out.error_estimate = scan.err;
    out.shift_n = 0;
    out.trunc_m = scan.used_m;
    out.method = Method::kMomentSeries;
    out.convergence = scan.converged ? ConvergenceClass::kConvergent : ConvergenceClass::kAsymptotic;
    return out;
}

UmbralResult ramanujan_sum(const Oracle& oracle, const Complex& a, const EngineConfig& cfg) {
    const int N = cfg.shift_n > 0 ? cfg.shift_n : std::max(10, Context::digits());
    Real probe_tol = ldexp10(-(Context::digits() - 3));

    // lattice screening: f' must exist at a+1, a+2, ..., N+a
    for (int k = 1; k <= N; ++k) {
        Complex p = a + Complex(Real(static_cast<long>(k)));
        if (oracle.singular_at(p))
            throw Error(Error::kLatticePole,
                        oracle.name() + ": oracle has poles on summation lattice (at a + " + std::to_string(k) + ")");
    }

    std::vector<Jet> lattice;
    lattice.reserve(N);
    for (int k = 1; k <= N; ++k)
        lattice.push_back(oracle.jet(a + Complex(Real(static_cast<long>(k))), 1));

    const int kProbe = 10;
    std::vector<Complex> probe;
    for (int k = 0; k < std::min<int>(kProbe, N); ++k) probe.push_back(lattice[k][1]);

    if (probe_alternating(probe, probe_tol)) {
        auto term = [&](int k) -> Real {
            if (k < N) return -lattice[k][1].re;
            Jet j = oracle.jet(a + Complex(Real(static_cast<long>(k + 1))), 1);
            return -j[1].re;
        };
        AccelResult acc = accelerate_alternating(term);
        UmbralResult out;
        out.value = Complex(acc.limit);
        out.error_estimate = acc.err_estimate;
        out.shift_n = acc.terms_used;
        out.trunc_m = 0;
        out.method = Method::kAlternatingAccel;
        out.convergence = ConvergenceClass::kConvergent;
        return out;
    }

    // shifted Euler-Maclaurin at N + a
    Complex shift_point = a + Complex(Real(static_cast<long>(N)));
    if (oracle.singular_at(shift_point))
        throw Error(Error::kLatticePole, oracle.name() + ": shift point N + a is singular");
    const int cap = BernoulliTable::shared().cap() - 2;
    int order = cfg.trunc_m > 0 ? cfg.trunc_m : std::min(cap, 2 * Context::digits() + 8);
    Jet shift_jet = oracle.jet(shift_point, order);

    Complex lattice_sum;
    for (int k = 0; k < N; ++k) lattice_sum += lattice[k][1];

    Real scale = max(Real(1), max(abs(lattice_sum), abs(shift_jet[0])));
    Real eps_stop = ldexp10(-(Context::digits() + 5)) * scale;
    TailScan scan = scan_bernoulli_tail(shift_jet, eps_stop, cfg.trunc_m);
    while (cfg.trunc_m <= 0 && scan.hit_cap && order < cap) {
        order = std::min(cap, 2 * order);
        shift_jet = oracle.jet(shift_point, order);
        scan = scan_bernoulli_tail(shift_jet, eps_stop, cfg.trunc_m);
    }

    UmbralResult out;
    bool usable = !scan.diverged_early;
    if (usable) {
        out.value = scan.sum - lattice_sum;
        out.error_estimate = scan.err + ldexp10(-(Context::digits() + 2)) * scale;
        out.shift_n = N;
        out.trunc_m = scan.used_m;
        out.convergence = scan.converged ? ConvergenceClass::kConvergent : ConvergenceClass::kAsymptotic;
        if (probe.size() >= 10) {
            Real d4 = abs(probe[3]);
            Real d10 = abs(probe[9]);
            bool abs_convergent = false;
            if (!d4.is_zero() && !d10.is_zero()) {
                double p_hat = -std::log((d10 / d4).to_double()) / std::log(10.0 / 4.0);
                abs_convergent = p_hat > 1.3;
            } else if (d10.is_zero()) {
                abs_convergent = true;
            }
            out.method = abs_convergent ? Method::kDirectSum : Method::kShiftedEM;
        } else {
            out.method = Method::kShiftedEM;
        }
    }

    // severe cancellation between the jet tail and the lattice sum, or an
    // unusable tail: fall back to the Taylor-moment route when it converges
    bool cancels = usable && out.error_estimate > ldexp10(-(Context::digits() - 8)) * max(Real(1), abs(out.value));
    if ((!usable || cancels) && cfg.allow_moment_series) {
        try {
            UmbralResult ms = moment_series(oracle, a, cfg);
            if (!usable || ms.error_estimate < out.error_estimate) return ms;
        } catch (const Error&) {
            // keep the shifted-EM result or fail below
        }
    }
    if (!usable)
        throw Error(Error::kNoConvergence,
                    oracle.name() + ": not Ramanujan-summable in this mode (derivatives do not decay at N + a)");
    return out;
}

} // namespace umbra::engine
