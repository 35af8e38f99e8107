#include "umbra/quadrature.hpp"

#include <algorithm>
#include <vector>
#include <map>
#include <mutex>

namespace umbra {

namespace {

struct GaussRule {
    std::vector<Real> nodes;    // on (-1, 1), symmetric
    std::vector<Real> weights;
};

// Legendre P_n and P_n' by forward recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
    Real p0(1L), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real pk = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
        p0 = std::move(p1);
        p1 = std::move(pk);
    }
    Real dp = Real(n) * (x * p1 - p0) / (x * x - Real(1));
    return {p1, dp};
}

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    Real pi = Real::pi();
    Real tol = ldexp10(-(Context::digits() + 6));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, then Newton
        Real x = cos(pi * (Real(4 * i + 3) / Real(4 * n + 2)));
        for (int it = 0; it < 200; ++it) {
            auto [p, dp] = legendre(n, x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < tol) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = Real(0);
        auto [p, dp] = legendre(n, Real(0));
        (void)p;
        rule.weights[n / 2] = Real(2) / (dp * dp);
    }
    return rule;
}

const GaussRule& cached_rule(int n) {
    static std::map<std::pair<int, long>, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, static_cast<long>(Context::bits()));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rule(n)).first;
    return it->second;
}

constexpr int kLoOrder = 15;
constexpr int kHiOrder = 31;

template <typename V>
struct Panel {
    Real a, b;
    V value;
    Real err;
};

template <typename V>
void eval_panel(const std::function<V(const Real&)>& f, Panel<V>& p, long& evals) {
    const GaussRule& lo = cached_rule(kLoOrder);
    const GaussRule& hi = cached_rule(kHiOrder);
    Real half = (p.b - p.a) / Real(2);
    Real mid = (p.a + p.b) / Real(2);
    V acc_lo{};
    V acc_hi{};
    for (int i = 0; i < kLoOrder; ++i) {
        V fx = f(mid + half * lo.nodes[i]);
        acc_lo += fx * V(lo.weights[i]);
    }
    for (int i = 0; i < kHiOrder; ++i) {
        V fx = f(mid + half * hi.nodes[i]);
        acc_hi += fx * V(hi.weights[i]);
    }
    evals += kLoOrder + kHiOrder;
    acc_lo *= V(half);
    acc_hi *= V(half);
    p.value = acc_hi;
    p.err = abs(acc_hi - acc_lo);
    if (p.err.is_nan() || abs(p.value).is_nan())
        throw Error(Error::kDomain, "integrand returned NaN inside [" + p.a.str(8) + ", " + p.b.str(8) + "]");
}

template <typename V, typename R>
R integrate_impl(const std::function<V(const Real&)>& f, const Real& a, const Real& b,
                 const QuadOptions& opt) {
    R out;
    if (a == b) {
        out.value = V{};
        out.err_estimate = Real(0);
        return out;
    }
    Real total_len = abs(b - a);
    std::vector<Panel<V>> work;
    Panel<V> first{a, b, V{}, Real(0)};
    eval_panel(f, first, out.evaluations);
    work.push_back(std::move(first));

    V acc{};
    Real err_acc(0);
    int panels = 1;
    while (!work.empty()) {
        Panel<V> p = std::move(work.back());
        work.pop_back();
        Real budget = opt.abs_tol * abs(p.b - p.a) / total_len;
        if (p.err <= budget || panels >= opt.max_panels) {
            if (p.err > budget) out.converged = false;
            acc += p.value;
            err_acc += p.err;
            continue;
        }
        Real mid = (p.a + p.b) / Real(2);
        Panel<V> left{p.a, mid, V{}, Real(0)};
        Panel<V> right{mid, p.b, V{}, Real(0)};
        eval_panel(f, left, out.evaluations);
        eval_panel(f, right, out.evaluations);
        panels += 2;
        work.push_back(std::move(left));
        work.push_back(std::move(right));
    }
    out.value = acc;
    out.err_estimate = err_acc;
    return out;
}

template <typename V, typename R>
R integrate_inf_impl(const std::function<V(const Real&)>& f, const Real& a, const QuadOptions& opt) {
    std::function<V(const Real&)> g = [&f, &a](const Real& u) -> V {
        Real om = Real(1) - u;
        Real t = a + u / om;
        return f(t) * V(Real(1) / (om * om));
    };
    return integrate_impl<V, R>(g, Real(0), Real(1), opt);
}

} // namespace

QuadResult integrate(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                     const QuadOptions& opt) {
    return integrate_impl<Real, QuadResult>(f, a, b, opt);
}

QuadResultC integrate(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                      const QuadOptions& opt) {
    return integrate_impl<Complex, QuadResultC>(f, a, b, opt);
}

QuadResult integrate_to_inf(const std::function<Real(const Real&)>& f, const Real& a,
                            const QuadOptions& opt) {
    return integrate_inf_impl<Real, QuadResult>(f, a, opt);
}

QuadResultC integrate_to_inf(const std::function<Complex(const Real&)>& f, const Real& a,
                             const QuadOptions& opt) {
    return integrate_inf_impl<Complex, QuadResultC>(f, a, opt);
}

// ---------------------------------------------------------------------------

PvResult principal_value_pair(const PvSideIntegral& left, const PvSideIntegral& right,
                              const Real& tol, const PvSchedule& schedule) {
    PvResult out;
    Real eps = schedule.eps0;
    int levels = std::max(3, schedule.levels);
    for (int j = 0; j < levels; ++j) {
        out.level_values.push_back(left(eps) + right(eps));
        eps *= schedule.ratio;
    }
    // divergence check: gaps must shrink once the schedule bites
    Real g1 = abs(out.level_values[1] - out.level_values[0]);
    Real gl = abs(out.level_values[levels - 1] - out.level_values[levels - 2]);
    if (gl > g1 * Real(4) && gl > tol)
        throw Error(Error::kNoConvergence, "not a PV-cancelling singularity: level gaps grow");

    // extrapolate the last three values with v(eps) = v0 + c1 eps + c3 eps^3
    Real e0 = schedule.eps0;
    for (int j = 0; j < levels - 3; ++j) e0 *= schedule.ratio;
    Real e1 = e0 * schedule.ratio;
    Real e2 = e1 * schedule.ratio;
    const Real& v0 = out.level_values[levels - 3];
    const Real& v1 = out.level_values[levels - 2];
    const Real& v2 = out.level_values[levels - 1];
    // solve the 3x3 Vandermonde-like system in closed form
    Real d01 = (v0 - v1) / (e0 - e1);
    Real d12 = (v1 - v2) / (e1 - e2);
    // v = v0 + c1 e + c3 e^3 -> divided differences over {e, e^3}
    Real q01 = (e0 * e0 * e0 - e1 * e1 * e1) / (e0 - e1);
    Real q12 = (e1 * e1 * e1 - e2 * e2 * e2) / (e1 - e2);
    Real c3 = (d01 - d12) / (q01 - q12);
    Real c1 = d12 - c3 * q12;
    Real value = v2 - c1 * e2 - c3 * e2 * e2 * e2;
    out.value = value;
    Real plain_richardson = (v2 * e1 - v1 * e2) / (e1 - e2);  // kills the linear term only
    out.err_estimate = max(abs(value - plain_richardson), abs(c3) * e2 * e2 * e2);
    return out;
}

PvResult principal_value_pair(const std::function<Real(const Real&)>& f, const Real& x,
                              const Real& tol, const PvSchedule& schedule, const QuadOptions& opt) {
    PvSideIntegral left = [&](const Real& eps) { return integrate(f, Real(0), Real(1) - eps, opt).value; };
    PvSideIntegral right = [&](const Real& eps) { return integrate(f, Real(1) + eps, x, opt).value; };
    return principal_value_pair(left, right, tol, schedule);
}

// ---------------------------------------------------------------------------

AccelResult accelerate_alternating(const std::function<Real(int)>& term, int max_terms) {
    // probe: locate strict alternation with non-increasing magnitude
    const int probe = 12;
    int start = -1;
    std::vector<Real> head;
    for (int k = 0; k < probe + 4; ++k) head.push_back(term(k));
    for (int s = 0; s + probe <= static_cast<int>(head.size()); ++s) {
        bool ok = true;
        for (int k = s; k < s + probe - 1; ++k) {
            if (head[k].is_zero() || head[k + 1].is_zero() ||
                head[k].sign() == head[k + 1].sign() || abs(head[k + 1]) > abs(head[k])) {
                ok = false;
                break;
            }
        }
        if (ok) { start = s; break; }
    }
    if (start < 0)
        throw Error(Error::kDomain, "sequence is not alternating with decreasing magnitude");

    // terms ahead of the alternating regime are summed directly
    Real prefix(0);
    for (int k = 0; k < start; ++k) prefix += head[k];

    // n terms give error ~ (3+sqrt 8)^(-n)
    int n = max_terms > 0 ? max_terms
                          : static_cast<int>(Context::digits() * 2.302585 / 1.7627) + 8;
    int sgn0 = head[start].sign();
    auto mag = [&](int j) { return abs(term(start + j)); };

    Real d = pow(Real(3) + sqrt(Real(8)), Real(n));
    d = (d + Real(1) / d) / Real(2);
    Real b(-1), c = -d, s(0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * mag(k);
        b = b * Real(k + n) * Real(k - n) / (Real(2 * k + 1) / Real(2) * Real(k + 1));
    }
    Real tail = s / d;
    AccelResult out;
    out.limit = prefix + Real(sgn0) * tail;
    out.err_estimate = max(abs(tail) / d, ldexp10(-(Context::digits() + 4)) * max(Real(1), abs(out.limit)));
    out.terms_used = start + n;
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Bracket> find_sign_changes(const std::function<Real(const Real&)>& f, const Real& a,
                                       const Real& b, const Real& step) {
    if (!(step > Real(0)))
        throw Error(Error::kBadInput, "scan step must be positive");
    std::vector<Bracket> out;
    Real t = a;
    Real ft = f(t);
    while (t < b) {
        Real t2 = min(t + step, b);
        Real ft2 = f(t2);
        if (!ft.is_nan() && !ft2.is_nan() && ft.sign() * ft2.sign() < 0)
            out.push_back({t, t2});
        t = std::move(t2);
        ft = std::move(ft2);
    }
    return out;
}

Real refine_bracket(const std::function<Real(const Real&)>& f, const Bracket& bracket, const Real& tol) {
    Real lo = bracket.lo, hi = bracket.hi;
    Real flo = f(lo), fhi = f(hi);
    if (flo.sign() * fhi.sign() >= 0)
        throw Error(Error::kBadInput, "refine_bracket: endpoints do not bracket a sign change");
    while (hi - lo > tol) {
        Real mid = (lo + hi) / Real(2);
        Real fm = f(mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == flo.sign()) {
            lo = std::move(mid);
            flo = std::move(fm);
        } else {
            hi = std::move(mid);
        }
    }
    return (lo + hi) / Real(2);
}

} // namespace umbra
