#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "umbra/context.hpp"

namespace umbra {

// Error with a stable category, mirrored by the C API status codes.
struct Error : std::runtime_error {
    enum Code {
        kDomain = 1,       // argument outside an operation's domain
        kNoConvergence,    // iteration/subdivision budget exhausted
        kCapacity,         // table index above configured cap
        kUnknownSymbol,    // umbral symbol not present in the moment table
        kLatticePole,      // oracle singular on the summation lattice
        kBadInput,         // malformed file/argument
        kNotFound,         // unknown registry id / oracle name
    };
    Code code;
    Error(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Arbitrary-precision real backed by MPFR, precision taken from Context at
// construction time. All rounding is to nearest; identical inputs under the
// same context give bit-identical results.
class Real {
public:
    Real() { mpfr_init2(v_, Context::bits()); mpfr_set_zero(v_, 1); }
    Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(unsigned long n) : Real() { mpfr_set_ui(v_, n, MPFR_RNDN); }
    Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit Real(const std::string& s) : Real() {
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw Error(Error::kBadInput, "unparsable numeric literal: " + s);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // ratio of two exact integers, rounded once at context precision
    static Real ratio(long num, long den);
    static Real pi();
    static Real euler_gamma();
    static Real log2();
    static Real nan();
    static Real inf(int sign = 1);

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(int digits = 0) const;

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { a += b; return a; }
    friend Real operator-(Real a, const Real& b) { a -= b; return a; }
    friend Real operator*(Real a, const Real& b) { a *= b; return a; }
    friend Real operator/(Real a, const Real& b) { a /= b; return a; }
    friend Real operator-(Real a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

#define UMBRA_REAL_UNARY(name, fn)                               \
    inline Real name(const Real& x) {                           \
        Real r;                                                 \
        fn(r.raw(), x.raw(), MPFR_RNDN);                        \
        return r;                                               \
    }

UMBRA_REAL_UNARY(abs, mpfr_abs)
UMBRA_REAL_UNARY(sqrt, mpfr_sqrt)
UMBRA_REAL_UNARY(exp, mpfr_exp)
UMBRA_REAL_UNARY(expm1, mpfr_expm1)
UMBRA_REAL_UNARY(log, mpfr_log)
UMBRA_REAL_UNARY(log1p, mpfr_log1p)
UMBRA_REAL_UNARY(sin, mpfr_sin)
UMBRA_REAL_UNARY(cos, mpfr_cos)
UMBRA_REAL_UNARY(tan, mpfr_tan)
UMBRA_REAL_UNARY(sinh, mpfr_sinh)
UMBRA_REAL_UNARY(cosh, mpfr_cosh)
UMBRA_REAL_UNARY(atan, mpfr_atan)
UMBRA_REAL_UNARY(floor, mpfr_floor)
UMBRA_REAL_UNARY(ceil, mpfr_ceil)

#undef UMBRA_REAL_UNARY

inline Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Real pow(const Real& b, const Real& e) {
    Real r;
    mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
    return r;
}

inline Real pow_si(const Real& b, long e) {
    Real r;
    mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN);
    return r;
}

inline Real ldexp10(int e) {  // 10^e at context precision
    Real r;
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

// 10^(-Context::digits()): the working tolerance scale of the context
inline Real context_eps() { return ldexp10(-Context::digits()); }

} // namespace umbra
