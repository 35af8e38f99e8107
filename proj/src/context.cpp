#include "umbra/context.hpp"

#include <cmath>

#include "umbra/complex.hpp"
#include "umbra/real.hpp"

namespace umbra {

namespace {
mpfr_prec_t bits_for(int digits) {
    // 32 guard bits over the decimal request
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}
} // namespace

int Context::digits_ = Context::kDefaultDigits;
mpfr_prec_t Context::bits_ = bits_for(Context::kDefaultDigits);

int Context::digits() { return digits_; }
mpfr_prec_t Context::bits() { return bits_; }

int Context::set_precision(int decimal_digits) {
    if (decimal_digits < kMinDigits) decimal_digits = kMinDigits;
    if (decimal_digits > kMaxDigits) decimal_digits = kMaxDigits;
    digits_ = decimal_digits;
    bits_ = bits_for(decimal_digits);
    return digits_;
}

Real Real::ratio(long num, long den) {
    Real r(num);
    Real d(den);
    r /= d;
    return r;
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::euler_gamma() {
    Real r;
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::log2() {
    Real r;
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real Real::nan() {
    Real r;
    mpfr_set_nan(r.raw());
    return r;
}

Real Real::inf(int sign) {
    Real r;
    mpfr_set_inf(r.raw(), sign);
    return r;
}

std::string Real::str(int digits) const {
    if (digits <= 0) digits = Context::digits();
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", digits, v_) < 0)
        return "<fmt-error>";
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string Complex::str(int digits) const {
    if (im.is_zero()) return re.str(digits);
    std::string s = re.str(digits);
    s += (im.sign() < 0) ? " - " : " + ";
    Real a = abs(im);
    s += a.str(digits) + "i";
    return s;
}

} // namespace umbra
