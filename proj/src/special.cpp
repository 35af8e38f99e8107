#include "umbra/special.hpp"

#include <numeric>
#include <string>

#include "umbra/bernoulli.hpp"

namespace umbra::sf {

namespace {

const Complex kOne{Real(1L)};

int em_cutoff(const Complex& s0) {
    double im = abs(s0.im).to_double();
    int n0 = Context::digits() + static_cast<int>(0.6 * im) + 2;
    return n0 < 16 ? 16 : n0;
}

// jet of k^{-s} about s0: k^{-s0} * (-log k)^m / m!
void add_power_term(Jet& acc, const Real& base, const Complex& s0, const Complex& weight) {
    Real lb = log(base);
    Complex cur = exp(s0 * Complex(-lb)) * weight;
    for (int m = 0; m <= acc.order(); ++m) {
        acc[m] += cur;
        cur *= Complex(-lb);
        cur /= Complex(Real(static_cast<long>(m + 1)));
    }
}

Jet linear_jet(const Complex& c0, const Complex& c1, const Complex& point, int order) {
    Jet j(point, order);
    j[0] = c0;
    if (order >= 1) j[1] = c1;
    return j;
}

// Core Euler-Maclaurin sum for zeta(s, base offset alpha) as a jet in s.
// with_pole=false returns (s-1)*zeta instead (entire form).
Jet em_zeta_impl(const Complex& s0, const Real& alpha, int order, bool with_pole) {
    const auto& bern = BernoulliTable::shared();
    int n0 = em_cutoff(s0);
    Real target = ldexp10(-(Context::digits() + 6));

    Jet sum(s0, order);
    for (int k = 0; k < n0; ++k)
        add_power_term(sum, Real(static_cast<long>(k)) + alpha, s0, kOne);

    Real big = Real(static_cast<long>(n0)) + alpha;  // n0 + alpha
    Jet big_pow(s0, order);                          // (n0+alpha)^{-s}
    add_power_term(big_pow, big, s0, kOne);

    // half term: subtract (n0+alpha)^{-s}/2 (the k=n0 term was not added)
    sum = sum + big_pow * Complex(Real::ratio(1, 2));

    // Bernoulli tail: sum_j B_2j/(2j)! * (s)(s+1)...(s+2j-2) * (n0+a)^{-s-2j+1}
    Jet s_jet = Jet::variable(s0, order);
    Jet poch = Jet::constant(kOne, s0, order);
    Jet tail(s0, order);
    Real big_inv = Real(1) / big;
    Jet pw = big_pow * Complex(big);  // (n0+alpha)^{-s+1}
    Complex inv2(Real(1) / (big * big));
    int max_j = bern.cap() / 2 - 1;
    Real prev_mag = Real::inf();
    for (int j = 1; j <= max_j; ++j) {
        // extend pochhammer to (s)(s+1)..(s+2j-2)
        if (j == 1) {
            poch = s_jet;
        } else {
            poch = poch * (s_jet + Complex(Real(static_cast<long>(2 * j - 3))));
            poch = poch * (s_jet + Complex(Real(static_cast<long>(2 * j - 2))));
        }
        pw *= inv2;  // (n0+alpha)^{-s-2j+1}
        mpq_class coef = bern.rational(2 * j);
        for (int i = 1; i <= 2 * j; ++i) coef /= i;
        Jet term = poch * pw * Complex(to_real(coef));
        sum = sum + term;
        Real mag(0);
        for (int i = 0; i <= term.order(); ++i) mag += abs(term[i]);
        if (mag < target) break;
        if (mag > prev_mag && j > 3) break;  // asymptotic turnaround
        prev_mag = mag;
    }

    // pole piece: (n0+alpha)^{1-s}/(s-1), or times (s-1) for the entire form
    Jet pole_num = big_pow * Complex(big);  // (n0+alpha)^{1-s}
    if (with_pole) {
        Jet denom = linear_jet(s0 - kOne, kOne, s0, order);
        return sum + pole_num / denom;
    }
    Jet sm1 = linear_jet(s0 - kOne, kOne, s0, order);
    return sum * sm1 + pole_num;
}

} // namespace

Jet zeta_jet(const Complex& s0, int order) {
    if (abs(s0 - kOne) < ldexp10(-(Context::digits() + 2)))
        throw Error(Error::kDomain, "zeta has a pole at s = 1");
    return em_zeta_impl(s0, Real(1), order, true);
}

Complex zeta(const Complex& s, int order) {
    Jet j = zeta_jet(s, order);
    return j.derivative(order);
}

Jet zeta1_jet(const Complex& s0, int order) { return em_zeta_impl(s0, Real(1), order, false); }

Complex zeta1(const Complex& s) { return zeta1_jet(s, 0)[0]; }

Jet hurwitz_zeta_jet(const Complex& s0, const Real& alpha, int order) {
    if (!(alpha > Real(0)))
        throw Error(Error::kDomain, "hurwitz_zeta requires alpha > 0");
    if (abs(s0 - kOne) < ldexp10(-(Context::digits() + 2)))
        throw Error(Error::kDomain, "hurwitz zeta has a pole at s = 1");
    return em_zeta_impl(s0, alpha, order, true);
}

Complex hurwitz_zeta(const Complex& s, const Real& alpha) { return hurwitz_zeta_jet(s, alpha, 0)[0]; }

// ---------------------------------------------------------------------------

DirichletCharacter DirichletCharacter::principal_mod1() {
    DirichletCharacter chi;
    chi.modulus = 1;
    chi.values = {Complex(Real(1L))};
    chi.principal = true;
    return chi;
}

DirichletCharacter DirichletCharacter::nonprincipal_mod4() {
    DirichletCharacter chi;
    chi.modulus = 4;
    chi.values = {Complex(Real(1L)), Complex(Real(0L)), Complex(Real(-1L)), Complex(Real(0L))};
    chi.principal = false;
    return chi;
}

DirichletCharacter DirichletCharacter::from_table(int modulus, std::vector<Complex> values) {
    DirichletCharacter chi;
    chi.modulus = modulus;
    chi.values = std::move(values);
    bool princ = true;
    for (int r = 1; r <= modulus; ++r) {
        if (std::gcd(r, modulus) == 1 && !(chi.values[r - 1] == Complex(Real(1L)))) princ = false;
    }
    chi.principal = princ;
    chi.validate();
    return chi;
}

const Complex& DirichletCharacter::at(long r) const {
    long m = r % modulus;
    if (m <= 0) m += modulus;
    return values[m - 1];
}

void DirichletCharacter::validate() const {
    if (modulus < 1 || static_cast<int>(values.size()) != modulus)
        throw Error(Error::kBadInput, "character table length must equal the modulus");
    Real tol = ldexp10(-(Context::digits() - 2));
    for (int r = 1; r <= modulus; ++r) {
        bool coprime = std::gcd(r, modulus) == 1;
        bool zero = abs(values[r - 1]) < tol;
        if (coprime == zero)
            throw Error(Error::kBadInput,
                        "character value at " + std::to_string(r) + " violates the gcd zero pattern");
    }
    for (int a = 1; a <= modulus; ++a)
        for (int b = a; b <= modulus; ++b) {
            if (std::gcd(a, modulus) != 1 || std::gcd(b, modulus) != 1) continue;
            long ab = (static_cast<long>(a) * b) % modulus;
            if (ab == 0) ab = modulus;
            if (abs(at(ab) - values[a - 1] * values[b - 1]) > tol)
                throw Error(Error::kBadInput, "character table is not multiplicative");
        }
}

Complex dirichlet_l(const Complex& s, const DirichletCharacter& chi) {
    if (chi.principal && abs(s - kOne) < ldexp10(-(Context::digits() + 2)))
        throw Error(Error::kDomain, "L(s, principal chi) has a pole at s = 1");
    long k = chi.modulus;
    Complex acc;
    for (long r = 1; r <= k; ++r) {
        if (abs(chi.values[r - 1]).is_zero()) continue;
        acc += chi.values[r - 1] * hurwitz_zeta(s, Real(r) / Real(k));
    }
    return exp(s * Complex(-log(Real(k)))) * acc;
}

// ---------------------------------------------------------------------------

namespace {

int stirling_threshold() { return std::max(14, static_cast<int>(0.37 * (Context::digits() + 6)) + 2); }

// Stirling jet of logPi(w) = (w + 1/2) log w - w + log(2 pi)/2 + tail, valid
// for Re w >= stirling_threshold or |w| large.
Jet stirling_log_pi(const Jet& w) {
    const auto& bern = BernoulliTable::shared();
    Real target = ldexp10(-(Context::digits() + 6));
    Jet logw = jet_log(w);
    Jet half = Jet::constant(Complex(Real::ratio(1, 2)), w.point(), w.order());
    Jet acc = (w + half) * logw - w;
    acc[0] += Complex((log(Real(2) * Real::pi())) / Real(2));
    // + sum_j B_2j / (2j (2j-1)) w^{1-2j}
    Jet winv = Jet::constant(kOne, w.point(), w.order()) / w;
    Jet winv2 = winv * winv;
    Jet pw = winv;  // w^{-1}
    Real prev = Real::inf();
    for (int j = 1; 2 * j <= bern.cap(); ++j) {
        Jet term = pw * Complex(bern.moment(2 * j) / Real(static_cast<long>(2 * j) * (2 * j - 1)));
        Real mag = abs(term[0]);
        if (mag > prev) break;  // optimal truncation
        acc = acc + term;
        if (mag < target) break;
        prev = mag;
        pw = pw * winv2;
    }
    return acc;
}

} // namespace

Jet log_gamma_pi_jet(const Complex& p, int order, const Complex& scale, const Complex& offset) {
    Complex z0 = scale * p + offset;
    // reject poles at negative integers
    if (z0.im.is_zero() && z0.re < Real(0)) {
        Real r = -z0.re;
        if (abs(r - floor(r + Real::ratio(1, 2))) < ldexp10(-(Context::digits() - 4)) && r > Real::ratio(1, 2))
            throw Error(Error::kDomain, "log_gamma_pi pole at negative integer " + z0.str(8));
    }
    int thresh = stirling_threshold();
    long lift = 0;
    if (z0.re < Real(static_cast<long>(thresh)) && abs(z0.im) < Real(static_cast<long>(thresh)))
        lift = (Real(static_cast<long>(thresh)) - z0.re).to_long() + 1;

    // w = z + lift + 1 so that logPi(z) = logGamma(z + 1)
    Jet z(p, order);
    z[0] = z0;
    if (order >= 1) z[1] = scale;
    Jet w = z + Complex(Real(lift + 1));
    Jet acc = stirling_log_pi(w + Complex(Real(-1L)));  // logPi(z + lift)
    for (long k = 1; k <= lift; ++k)
        acc = acc - jet_log(z + Complex(Real(k)));
    return acc;
}

Complex log_gamma_pi(const Complex& s) { return log_gamma_pi_jet(s, 0, kOne, Complex())[0]; }

Jet digamma_pi_jet(const Complex& p, int order, const Complex& scale, const Complex& offset) {
    Jet lg = log_gamma_pi_jet(p, order + 1, scale, offset);
    Jet d(p, order);
    for (int m = 0; m <= order; ++m) d[m] = lg[m + 1] * Complex(Real(static_cast<long>(m + 1)));
    // chain rule: lg is a jet in x; d/dz logPi = (d/dx logPi) / scale
    Complex inv = kOne / scale;
    for (int m = 0; m <= order; ++m) d[m] *= inv;
    return d;
}

Complex digamma_pi(const Complex& s) { return digamma_pi_jet(s, 0, kOne, Complex())[0]; }

// ---------------------------------------------------------------------------

Real theta_psi(const Real& x, int deriv) {
    if (!(x > Real(0)))
        throw Error(Error::kDomain, "theta_psi requires x > 0");
    Real pi = Real::pi();
    Real log10 = log(Real(10));
    Real cut = Real(static_cast<long>(Context::digits() + 8)) * log10;
    Real acc(0);
    for (long n = 1;; ++n) {
        Real n2pix = Real(n) * Real(n) * pi * x;
        if (n2pix > cut && n > 1) break;
        Real term = exp(-n2pix);
        Real factor(1);
        for (int d = 0; d < deriv; ++d) factor *= -Real(n) * Real(n) * pi;
        acc += factor * term;
        if (n > 4096) break;
    }
    return acc;
}

Complex xi_complete(const Complex& s) {
    Complex half_s = s * Complex(Real::ratio(1, 2));
    // near a trivial zero s = -2m the Pi(s/2) pole cancels the zeta zero;
    // evaluate the removable pair through Pi(s/2 + m) and a zeta jet
    if (s.im.is_zero() && s.re < Real(-1)) {
        Real nearest = floor(-s.re / Real(2) + Real::ratio(1, 2));
        long m = nearest.to_long();
        if (m >= 1) {
            Complex t = s + Complex(Real(2 * m));  // distance to -2m
            Complex lg = log_gamma_pi(half_s + Complex(Real(m)));
            Complex pref = exp(lg - half_s * Complex(log(Real::pi()))) * (s - kOne);
            Complex denom_rest(Real(1L));  // prod_{i=1}^{m-1} (s/2 + i)
            for (long i = 1; i < m; ++i) denom_rest *= half_s + Complex(Real(i));
            Complex ratio;  // zeta(s) / (s/2 + m)
            if (abs(t) < ldexp10(-(Context::digits() / 2))) {
                Jet zj = zeta_jet(Complex(Real(-2 * m)), 2);
                ratio = (zj[1] + zj[2] * t) * Complex(Real(2L));
            } else {
                ratio = zeta(s) / (half_s + Complex(Real(m)));
            }
            return pref * ratio / denom_rest;
        }
    }
    Complex lg = log_gamma_pi(half_s);
    Complex pref = exp(lg - half_s * Complex(log(Real::pi())));
    return pref * zeta1(s);
}

Jet xi_complete_jet(const Complex& s0, int order) {
    Complex half(Real::ratio(1, 2));
    Jet lg = log_gamma_pi_jet(s0, order, half, Complex());       // logPi(s/2)
    Jet s_jet = Jet::variable(s0, order);
    Jet expo = jet_exp(lg - s_jet * Complex(log(Real::pi()) / Real(2)));
    return expo * zeta1_jet(s0, order);
}

} // namespace umbra::sf
