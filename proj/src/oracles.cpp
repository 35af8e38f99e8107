#include "umbra/oracles.hpp"

#include <functional>

#include "umbra/bernoulli.hpp"
#include "umbra/special.hpp"

namespace umbra {

namespace {

const Complex kOne{Real(1L)};

Real near_int_dist(const Real& x) { return abs(x - floor(x + Real::ratio(1, 2))); }

bool is_real(const Complex& z) { return abs(z.im) < ldexp10(-(Context::digits() - 3)); }

// f(x) = exp(rate * x)
struct ExpOracle final : Oracle {
    Complex rate;
    std::string label;
    ExpOracle(Complex r, std::string l) : rate(std::move(r)), label(std::move(l)) {}
    std::string name() const override { return label; }
    Jet jet(const Complex& p, int order) const override {
        Jet j(p, order);
        Complex cur = exp(rate * p);
        for (int m = 0; m <= order; ++m) {
            j[m] = cur;
            cur *= rate;
            cur /= Complex(Real(static_cast<long>(m + 1)));
        }
        return j;
    }
};

// f(x) = factor * (x+c)^alpha * log(x+c)^{0|1}
struct PowOracle final : Oracle {
    Complex alpha, c, factor;
    bool with_log;
    std::string label;
    PowOracle(Complex a, Complex c_, Complex f, bool wl, std::string l)
        : alpha(std::move(a)), c(std::move(c_)), factor(std::move(f)), with_log(wl), label(std::move(l)) {}
    std::string name() const override { return label; }
    bool singular_at(const Complex& p) const override {
        return abs(p + c) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        Complex z = p + c;
        if (abs(z).is_zero() || (is_real(z) && z.re < Real(0)))
            throw Error(Error::kDomain, name() + ": requires x + c > 0, got " + z.str(8));
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        Jet z = Jet::variable(p, order) + c;
        Jet pw = jet_pow(z, alpha);
        Jet out = with_log ? pw * jet_log(z) : pw;
        return out * factor;
    }
};

// f(x) = (x+c) log(x+c)
struct XLogXOracle final : Oracle {
    Complex c;
    explicit XLogXOracle(Complex c_) : c(std::move(c_)) {}
    std::string name() const override { return "xlogx"; }
    bool singular_at(const Complex& p) const override {
        return abs(p + c) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        Complex z = p + c;
        if (abs(z).is_zero() || (is_real(z) && z.re < Real(0)))
            throw Error(Error::kDomain, "xlogx: requires x + c > 0, got " + z.str(8));
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        Jet z = Jet::variable(p, order) + c;
        return z * jet_log(z);
    }
};

// f(x) = log(x + c)
struct LogOracle final : Oracle {
    Complex c;
    explicit LogOracle(Complex c_) : c(std::move(c_)) {}
    std::string name() const override { return "log"; }
    bool singular_at(const Complex& p) const override {
        return abs(p + c) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        Complex z = p + c;
        if (abs(z).is_zero() || (is_real(z) && z.re < Real(0)))
            throw Error(Error::kDomain, "log: requires x + c > 0, got " + z.str(8));
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        return jet_log(Jet::variable(p, order) + c);
    }
};

// f(x) = sin(pi x)/x, entire
struct SincPiOracle final : Oracle {
    std::string name() const override { return "sinpix-over-x"; }
    Jet jet(const Complex& p, int order) const override {
        Real pi = Real::pi();
        if (abs(p) < Real::ratio(1, 2)) {
            // series about 0 re-expanded at p: build from entire series at p via
            // sin jet of higher order divided with explicit limit handling
            int ext = order + 2;
            Jet s = jet_sin(Jet::variable(p, ext) * Complex(pi));
            Jet x = Jet::variable(p, ext);
            if (abs(p).is_zero()) {
                // sin(pi x)/x = sum pi^{2k+1} (-1)^k x^{2k} / (2k+1)!
                Jet out(p, order);
                Complex term(pi);
                for (int k = 0; 2 * k <= order; ++k) {
                    out[2 * k] = term;
                    term *= Complex(-pi * pi);
                    term /= Complex(Real(static_cast<long>(2 * k + 2)) * Real(static_cast<long>(2 * k + 3)));
                }
                return out;
            }
            Jet q = s / x;
            Jet out(p, order);
            for (int m = 0; m <= order; ++m) out[m] = q[m];
            return out;
        }
        Jet x = Jet::variable(p, order);
        return jet_sin(x * Complex(pi)) / x;
    }
};

// f(x) = sin(freq x) * exp(rate x)
struct SinExpOracle final : Oracle {
    Complex freq, rate;
    SinExpOracle(Complex f, Complex r) : freq(std::move(f)), rate(std::move(r)) {}
    std::string name() const override { return "sin-exp"; }
    Jet jet(const Complex& p, int order) const override {
        Jet x = Jet::variable(p, order);
        Jet e(p, order);
        Complex cur = exp(rate * p);
        for (int m = 0; m <= order; ++m) {
            e[m] = cur;
            cur *= rate;
            cur /= Complex(Real(static_cast<long>(m + 1)));
        }
        return jet_sin(x * freq) * e;
    }
};

// f(x) = logPi(scale x + offset)
struct LogPiOracle final : Oracle {
    Complex scale, offset;
    LogPiOracle(Complex s, Complex o) : scale(std::move(s)), offset(std::move(o)) {}
    std::string name() const override { return "logpi"; }
    bool singular_at(const Complex& p) const override {
        Complex z = scale * p + offset;
        if (!is_real(z)) return false;
        return z.re < -Real::ratio(1, 2) && near_int_dist(z.re) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        if (singular_at(p))
            throw Error(Error::kDomain, "logpi: pole at negative integer argument " + (scale * p + offset).str(8));
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        return sf::log_gamma_pi_jet(p, order, scale, offset);
    }
};

// f(x) = Pi'/Pi(scale x + offset)
struct DigammaPiOracle final : Oracle {
    Complex scale, offset;
    bool times_x;
    DigammaPiOracle(Complex s, Complex o, bool tx) : scale(std::move(s)), offset(std::move(o)), times_x(tx) {}
    std::string name() const override { return times_x ? "x-digamma-pi" : "digamma-pi"; }
    bool singular_at(const Complex& p) const override {
        Complex z = scale * p + offset;
        if (!is_real(z)) return false;
        return z.re < -Real::ratio(1, 2) && near_int_dist(z.re) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        if (singular_at(p))
            throw Error(Error::kDomain, name() + ": pole at negative integer argument");
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        Jet d = sf::digamma_pi_jet(p, order, scale, offset);
        if (!times_x) return d;
        // (scale x + offset) * psi_Pi(scale x + offset)
        Jet z = Jet::variable(p, order) * scale + offset;
        return z * d;
    }
};

// f(x) = log zeta(x + c); jets through the Euler-Maclaurin zeta jet
struct LogZetaOracle final : Oracle {
    Complex c;
    bool logderiv;  // zeta'/zeta instead of log zeta
    LogZetaOracle(Complex c_, bool ld) : c(std::move(c_)), logderiv(ld) {}
    std::string name() const override { return logderiv ? "zeta-logderiv" : "logzeta"; }
    bool singular_at(const Complex& p) const override {
        return abs(p + c - kOne) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        if (singular_at(p))
            throw Error(Error::kDomain, name() + ": zeta pole at argument 1");
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        Jet z = sf::zeta_jet(p + c, logderiv ? order + 1 : order);
        // the zeta jet is an expansion in its own argument; x differs by a shift
        Jet zx(p, z.order());
        for (int m = 0; m <= z.order(); ++m) zx[m] = z[m];
        if (!logderiv) return jet_log(zx);
        Jet num(p, order);
        for (int m = 0; m <= order; ++m) num[m] = zx[m + 1] * Complex(Real(static_cast<long>(m + 1)));
        Jet den(p, order);
        for (int m = 0; m <= order; ++m) den[m] = zx[m];
        return num / den;
    }
};

// f(x) = log sin(freq x); poles wherever sin vanishes
struct LogSinOracle final : Oracle {
    Complex freq;
    explicit LogSinOracle(Complex f) : freq(std::move(f)) {}
    std::string name() const override { return "logsin"; }
    bool singular_at(const Complex& p) const override {
        Complex z = freq * p;
        if (!is_real(z)) return false;
        Real k = z.re / Real::pi();
        return near_int_dist(k) < ldexp10(-(Context::digits() - 3));
    }
    void check_point(const Complex& p) const override {
        if (singular_at(p))
            throw Error(Error::kDomain, "logsin: sin(freq x) vanishes at x = " + p.str(8));
    }
    Jet jet(const Complex& p, int order) const override {
        check_point(p);
        return jet_log(jet_sin(Jet::variable(p, order) * freq));
    }
};

// f(x) = (scale x) cot(scale x), entire at 0 with radius pi/|scale|
struct ZCotZOracle final : Oracle {
    Complex scale;
    explicit ZCotZOracle(Complex s) : scale(std::move(s)) {}
    std::string name() const override { return "zcotz"; }
    bool singular_at(const Complex& p) const override {
        Complex z = scale * p;
        if (!is_real(z)) return false;
        Real k = z.re / Real::pi();
        return abs(z.re) > Real::ratio(1, 2) && near_int_dist(k) < ldexp10(-(Context::digits() - 3));
    }
    Jet jet(const Complex& p, int order) const override {
        Complex z0 = scale * p;
        if (abs(z0) < Real::ratio(1, 2)) {
            // z cot z = sum_n (-4)^n B_2n z^{2n} / (2n)!; re-center only at 0
            if (!abs(z0).is_zero())
                throw Error(Error::kDomain, "zcotz: series jet only at x = 0");
            const auto& bern = BernoulliTable::shared();
            Jet out(p, order);
            mpq_class fact = 1;
            Complex zpow(kOne);
            Complex s2 = scale * scale;
            for (int n = 0; 2 * n <= order; ++n) {
                if (n > 0) {
                    fact *= (2 * n - 1);
                    fact *= (2 * n);
                }
                mpq_class q = bern.rational(2 * n) / fact;
                Complex coef = Complex(to_real(q)) * zpow;
                if (n % 2 == 1) coef = -coef;
                out[2 * n] = coef;
                zpow *= s2 * Complex(Real(4L));
            }
            return out;
        }
        if (singular_at(p))
            throw Error(Error::kDomain, "zcotz: pole at x = " + p.str(8));
        Jet z = Jet::variable(p, order) * scale;
        return z * jet_cos(z) / jet_sin(z);
    }
};

} // namespace

OraclePtr make_oracle(const std::string& name, const OracleParams& params) {
    const Complex zero;
    if (name == "exp-neg") return std::make_shared<ExpOracle>(Complex(Real(-1L)), "exp-neg");
    if (name == "exp") return std::make_shared<ExpOracle>(params.get("rate", Complex(Real(-1L))), "exp");
    if (name == "pow")
        return std::make_shared<PowOracle>(params.get("alpha", Complex(Real(-1L))), params.get("c", zero),
                                           kOne, false, "pow");
    if (name == "inv") return std::make_shared<PowOracle>(Complex(Real(-1L)), zero, kOne, false, "inv");
    if (name == "powlog")
        return std::make_shared<PowOracle>(params.get("alpha", Complex(Real(-1L))), params.get("c", zero),
                                           params.get("factor", kOne), true, "powlog");
    if (name == "log") return std::make_shared<LogOracle>(params.get("c", zero));
    if (name == "xlogx") return std::make_shared<XLogXOracle>(params.get("c", zero));
    if (name == "sinpix-over-x") return std::make_shared<SincPiOracle>();
    if (name == "sin-exp")
        return std::make_shared<SinExpOracle>(params.get("freq", Complex(Real::pi())),
                                              params.get("rate", Complex(Real(-1L))));
    if (name == "logpi")
        return std::make_shared<LogPiOracle>(params.get("scale", kOne), params.get("offset", zero));
    if (name == "digamma-pi")
        return std::make_shared<DigammaPiOracle>(params.get("scale", kOne), params.get("offset", zero), false);
    if (name == "x-digamma-pi")
        return std::make_shared<DigammaPiOracle>(params.get("scale", kOne), params.get("offset", zero), true);
    if (name == "logzeta") return std::make_shared<LogZetaOracle>(params.get("c", zero), false);
    if (name == "zeta-logderiv") return std::make_shared<LogZetaOracle>(params.get("c", zero), true);
    if (name == "logsin") return std::make_shared<LogSinOracle>(params.get("freq", Complex(Real::pi())));
    if (name == "zcotz") return std::make_shared<ZCotZOracle>(params.get("scale", kOne));
    throw Error(Error::kNotFound, "unknown oracle: " + name);
}

std::vector<std::string> oracle_names() {
    return {"exp-neg", "exp",   "pow",     "inv",        "powlog",       "log",
            "xlogx",   "sinpix-over-x", "sin-exp", "logpi",      "digamma-pi",   "x-digamma-pi",
            "logzeta", "zeta-logderiv", "logsin",  "zcotz"};
}

} // namespace umbra
