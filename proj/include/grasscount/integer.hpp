#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "grasscount/errors.hpp"

namespace grasscount {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

/// Exact nonnegative rational carrying a squared norm, squared determinant
/// or squared height budget. Everything that would be a length in the
/// underlying geometry is stored squared so comparisons stay decidable.
class SquaredMagnitude {
public:
    SquaredMagnitude() = default;
    explicit SquaredMagnitude(Rational v) : value_(std::move(v)) {
        if (value_ < 0) throw argument_error("squared magnitude must be nonnegative");
    }

    const Rational& value() const { return value_; }

    friend bool operator==(const SquaredMagnitude& a, const SquaredMagnitude& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const SquaredMagnitude& a, const SquaredMagnitude& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const SquaredMagnitude& a, const SquaredMagnitude& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const SquaredMagnitude& a, const SquaredMagnitude& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const SquaredMagnitude& a, const SquaredMagnitude& b) {
        return a.value_ >= b.value_;
    }

private:
    Rational value_ = 0;
};

inline Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
    // returns g = gcd(a,b) >= 0 with a*x + b*y = g
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int rational_floor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Int rational_ceil(const Rational& x) {
    return -rational_floor(-x);
}

inline Int rational_round(const Rational& x) {
    // nearest integer, ties toward +infinity
    return rational_floor(x + Rational(1, 2));
}

/// floor(sqrt(x)) for a nonnegative rational: largest m with m*m <= x.
inline Int rational_sqrt_floor(const Rational& x) {
    if (x < 0) throw argument_error("sqrt of negative rational");
    Int m = boost::multiprecision::sqrt(rational_floor(x));
    while (Rational((m + 1) * (m + 1)) <= x) ++m;
    while (Rational(m * m) > x) --m;
    return m;
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
    return g;
}

inline std::string rational_to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Int num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Int(s);
        } else {
            num = Int(s.substr(0, slash));
            den = Int(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw argument_error("cannot parse rational: " + s);
    }
    if (den == 0) throw argument_error("rational with zero denominator: " + s);
    return Rational(num, den);
}

}  // namespace grasscount
