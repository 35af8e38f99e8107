#pragma once

#include <doctest.h>

#include "umbra/complex.hpp"

namespace testutil {

inline bool close(const umbra::Real& a, const umbra::Real& b, const umbra::Real& tol) {
    using umbra::abs;
    bool ok = abs(a - b) <= tol;
    if (!ok)
        MESSAGE("got " << a.str(25) << " want " << b.str(25) << " diff " << abs(a - b).str(4));
    return ok;
}

inline bool close(const umbra::Complex& a, const umbra::Complex& b, const umbra::Real& tol) {
    using umbra::abs;
    bool ok = abs(a - b) <= tol;
    if (!ok)
        MESSAGE("got " << a.str(25) << " want " << b.str(25) << " diff " << abs(a - b).str(4));
    return ok;
}

inline umbra::Real tol(int k) { return umbra::ldexp10(k); }

} // namespace testutil
