#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "surdx/errors.hpp"

namespace surdx {

using integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored reduced with a positive
// denominator (the backend normalizes on every operation).
using rational = boost::multiprecision::cpp_rational;

inline integer num(const rational& q) { return boost::multiprecision::numerator(q); }
inline integer den(const rational& q) { return boost::multiprecision::denominator(q); }

// Construction that rejects a zero denominator instead of asserting.
inline rational make_rational(integer n, integer d) {
    if (d == 0) throw division_by_zero();
    return rational(std::move(n), std::move(d));
}

inline rational checked_div(const rational& x, const rational& y) {
    if (y == 0) throw division_by_zero();
    return x / y;
}

inline bool is_integer(const rational& q) { return den(q) == 1; }

inline rational pow_rational(const rational& base, unsigned long long e) {
    rational acc = 1;
    rational b = base;
    while (e != 0) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return acc;
}

inline std::string to_string(const integer& n) { return n.str(); }

inline std::string to_string(const rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace surdx
