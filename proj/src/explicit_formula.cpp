#include "umbra/explicit_formula.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "umbra/special.hpp"

namespace umbra::xf {

namespace {

// sum_{m>=0} 2 e^{-(m+1/2) b} [ (m+1/2) cos(g b) - g sin(g b) ] / ((m+1/2)^2 + g^2)
// = int_b^infty cos(g v)/sinh(v/2) dv for b > 0
Real cosexp_tail(const Real& g, const Real& b) {
    Real cb = cos(g * b), sb = sin(g * b);
    Real ratio = exp(-b);
    Real epow = exp(-b / Real(2));
    Real target = ldexp10(-(Context::digits() + 4));
    Real acc(0);
    Real g2 = g * g;
    for (long m = 0;; ++m) {
        Real beta = Real(m) + Real::ratio(1, 2);
        Real term = Real(2) * epow * (beta * cb - g * sb) / (beta * beta + g2);
        acc += term;
        epow *= ratio;
        if (epow * (beta + Real(1) + abs(g)) / (beta * beta + g2) < target && m > 2) break;
        if (m > 4000000)
            throw Error(Error::kNoConvergence, "cosexp_tail: series did not reach the target");
    }
    return acc;
}

} // namespace

std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i * i <= n; ++i)
        if (sieve[static_cast<size_t>(i)])
            for (long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    for (long i = 2; i <= n; ++i)
        if (sieve[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

Real von_mangoldt(long n) {
    if (n < 1) throw Error(Error::kDomain, "von_mangoldt requires n >= 1");
    if (n == 1) return Real(0);
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long m = n;
            while (m % p == 0) m /= p;
            return m == 1 ? log(Real(p)) : Real(0);
        }
    }
    return log(Real(n));  // n itself prime
}

Real psi_prime_side(const Real& x) {
    if (!(x > Real(1))) throw Error(Error::kDomain, "psi_prime_side requires x > 1");
    long xi = x.to_long();
    Real strict(0), loose(0);
    for (long p : primes_upto(xi + 1)) {
        Real pk(p);
        while (pk <= x) {
            Real t = log(Real(p)) / (pk - Real(1));
            if (pk < x) strict += t;
            loose += t;
            pk *= Real(p);
        }
    }
    return (strict + loose) / Real(2);
}

Real zero_pair_term_series(const Real& gamma_ord, const Real& x) {
    if (!(x > Real(1))) throw Error(Error::kDomain, "zero_pair_term requires x > 1");
    return -cosexp_tail(gamma_ord, log(x));
}

Real zero_pair_term(const Real& gamma_ord, const Real& x, const PvSchedule& schedule) {
    if (!(x > Real(1))) throw Error(Error::kDomain, "zero_pair_term requires x > 1");
    const Real& g = gamma_ord;
    Real L = log(x);
    Real quad_tol = ldexp10(-(Context::digits() - 6));
    QuadOptions opt(quad_tol);

    // In v = log t the integrand is cos(g v)/sinh(v/2); the eps-independent
    // far parts are integrated once, near-pole strips per schedule level.
    auto gfun = [&](const Real& v) -> Real { return cos(g * v) / sinh(v / Real(2)); };
    Real vmid = min(Real(1), L);
    Real right_fixed = L > vmid ? integrate(std::function<Real(const Real&)>(gfun), vmid, L, opt).value : Real(0);
    Real left_fixed = -cosexp_tail(g, Real(1)) -
                      integrate(std::function<Real(const Real&)>(gfun), vmid, Real(1), opt).value;
    // left integral over (-inf, -vmid] equals -int_vmid^inf by oddness

    PvSideIntegral left = [&](const Real& eps) -> Real {
        Real delta = -log1p(-eps);  // t in [0, 1-eps] <-> v <= -delta
        return left_fixed - integrate(std::function<Real(const Real&)>(gfun), delta, vmid, opt).value;
    };
    PvSideIntegral right = [&](const Real& eps) -> Real {
        Real v0 = log1p(eps);
        return right_fixed + integrate(std::function<Real(const Real&)>(gfun), v0, vmid, opt).value;
    };

    PvSchedule sched = schedule;
    if (sched.levels <= 0) {
        // default schedule scaled into the asymptotic regime eps << 1/gamma
        Real e0 = min(Real::ratio(1, 10), Real::ratio(1, 5) / max(Real(1), g));
        sched = PvSchedule(e0, Real::ratio(1, 10), 4);
    }
    Real pv_tol = ldexp10(-(Context::digits() - 8));
    return principal_value_pair(left, right, pv_tol, sched).value;
}

Real tail_integral(const Real& x) {
    if (!(x > Real(1))) throw Error(Error::kDomain, "tail_integral diverges for x <= 1");
    // u = 1/t maps [x, inf) to (0, 1/x]; integrand u^2/((1-u)^2 (1+u))
    auto f = [](const Real& u) -> Real {
        Real om = Real(1) - u;
        return u * u / (om * om * (Real(1) + u));
    };
    auto res = integrate(std::function<Real(const Real&)>(f), Real(0), Real(1) / x,
                         QuadOptions(ldexp10(-(Context::digits() - 4))));
    return res.value;
}

LogNegZeta log_neg_zeta_b(long cutoff) {
    if (cutoff < 2) throw Error(Error::kBadInput, "log_neg_zeta_b cutoff must be >= 2");
    Real acc = -Real::euler_gamma();
    for (long p : primes_upto(cutoff)) {
        Real lp = log(Real(p));
        Real pk(p);
        long k = 1;
        while (pk <= Real(cutoff)) {
            acc += lp / (pk * (pk - Real(1)));
            pk *= Real(p);
            ++k;
        }
        (void)k;
    }
    // sum_{n>N} log n/(n(n-1)) < (log N + 1)/(N - 1)
    Real n(cutoff);
    return {acc, (log(n) + Real(1)) / (n - Real(1))};
}

Real log_neg_zeta_b_zeta_route() {
    Real acc = -Real::euler_gamma();
    Real target = ldexp10(-(Context::digits() + 4));
    for (long n = 2;; ++n) {
        Jet z = sf::zeta_jet(Complex(Real(n)), 1);
        Real term = (z[1] / z[0]).re;
        acc -= term;
        if (abs(term) < target && n > 8) break;
        if (n > 4000) break;
    }
    return acc;
}

// ---------------------------------------------------------------------------

ZeroList load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Error::kBadInput, "cannot open zeros file: " + path);
    ZeroList out;
    out.source = ZeroList::kFile;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        Real v;
        try {
            v = Real(trimmed);
        } catch (const Error&) {
            throw Error(Error::kBadInput,
                        path + ":" + std::to_string(lineno) + ": unparsable ordinate '" + trimmed + "'");
        }
        if (!(v > Real(14)))
            throw Error(Error::kBadInput,
                        path + ":" + std::to_string(lineno) + ": ordinate must exceed 14");
        if (!out.ordinates.empty() && !(v > out.ordinates.back()))
            throw Error(Error::kBadInput,
                        path + ":" + std::to_string(lineno) + ": ordinates must be strictly increasing");
        out.ordinates.push_back(v);
    }
    return out;
}

std::string format_zeros(const ZeroList& zeros) {
    std::ostringstream os;
    os << "# zeta zero ordinates, one per line, ascending\n";
    for (const auto& g : zeros.ordinates) os << g.str(15) << "\n";
    return os.str();
}

ZeroList compute_zeros(int count, const Real& step) {
    if (count < 1 || count > 200)
        throw Error(Error::kBadInput, "compute_zeros supports 1 <= count <= 200");
    auto xi_line = [](const Real& t) {
        return sf::xi_complete(Complex(Real::ratio(1, 2), t)).re;
    };
    ZeroList out;
    out.source = ZeroList::kInternal;
    Real lo(2);
    Real window(40);
    while (out.count() < count) {
        Real hi = lo + window;
        if (lo > Real(450)) throw Error(Error::kNoConvergence, "zero scan exceeded the supported range");
        auto brackets = find_sign_changes(xi_line, lo, hi, step);
        for (const auto& b : brackets) {
            out.ordinates.push_back(refine_bracket(xi_line, b, ldexp10(-6)));
            if (out.count() == count) break;
        }
        lo = hi;
    }
    return out;
}

PsiComparison psi_explicit_side(const Real& x, const ZeroList& zeros, int K) {
    if (!(x > Real(1))) throw Error(Error::kDomain, "psi_explicit_side requires x > 1");
    if (K < 0 || K > zeros.count())
        throw Error(Error::kBadInput, "requested more zeros than the list holds");

    PsiComparison out;
    out.x = x;
    out.zeros_used = K;
    out.term_log = log(x - Real(1));
    out.term_tail = tail_integral(x);
    LogNegZeta c = log_neg_zeta_b(10000);
    out.term_const = c.value;
    out.const_tail_bound = c.tail_bound;

    // zero-pair terms in parallel, reduced in ordinate order
    std::vector<Real> terms(static_cast<size_t>(K));
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = std::min<unsigned>(hw, 8);
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= K) break;
                terms[static_cast<size_t>(i)] = zero_pair_term(zeros.ordinates[static_cast<size_t>(i)], x);
            }
        }));
    }
    for (auto& f : futs) f.get();
    Real zsum(0);
    for (const auto& t : terms) zsum += t;
    out.term_zero_sum = zsum;

    out.explicit_side = out.term_log - zsum + out.term_tail + out.term_const;
    out.prime_side = psi_prime_side(x);
    out.difference = abs(out.prime_side - out.explicit_side);
    return out;
}

} // namespace umbra::xf
