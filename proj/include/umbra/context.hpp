#pragma once

#include <mpfr.h>

namespace umbra {

// Global evaluation context. Precision is expressed in decimal digits and
// applies to every Real/Complex constructed after a set_precision() call;
// it is never carried per-value.
class Context {
public:
    static constexpr int kMinDigits = 15;
    static constexpr int kMaxDigits = 100;
    static constexpr int kDefaultDigits = 30;

    static int digits();
    static mpfr_prec_t bits();

    // Clamps to [kMinDigits, kMaxDigits]. Returns the value actually set.
    static int set_precision(int decimal_digits);

private:
    static int digits_;
    static mpfr_prec_t bits_;
};

} // namespace umbra
