#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "grasscount/config.hpp"
#include "grasscount/integer.hpp"

namespace grasscount {

/// High-precision real used for constants and predictions. Working
/// precision comes from GRASSCOUNT_PRECISION (decimal digits, default 50)
/// plus guard digits.
using Real = boost::multiprecision::mpfr_float;

inline void ensure_precision() {
    static const unsigned digits = precision_digits() + 10;
    if (Real::default_precision() != digits) Real::default_precision(digits);
}

inline Real real_pi() {
    ensure_precision();
    return boost::math::constants::pi<Real>();
}

inline Real to_real(const Int& x) {
    ensure_precision();
    return Real(x);
}

inline Real to_real(const Rational& x) {
    ensure_precision();
    return Real(numerator(x)) / Real(denominator(x));
}

inline Real to_real(const SquaredMagnitude& x) { return to_real(x.value()); }

/// sqrt of an exact squared magnitude, evaluated at working precision.
inline Real real_sqrt(const SquaredMagnitude& x) {
    return sqrt(to_real(x));
}

inline std::string real_to_string(const Real& x) {
    return x.str(precision_digits());
}

}  // namespace grasscount
