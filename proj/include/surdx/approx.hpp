#pragma once

#include <string>

#include "surdx/value.hpp"

namespace surdx {

// Rational enclosure lo <= value <= hi.
struct rat_interval {
    rational lo;
    rational hi;
};

namespace detail {

inline integer pow10(unsigned k) { return boost::multiprecision::pow(integer(10), k); }

inline rational rat_pow10(long long e) {
    if (e >= 0) return rational(pow10(static_cast<unsigned>(e)));
    return make_rational(1, pow10(static_cast<unsigned>(-e)));
}

// Enclosure of sqrt over a nonnegative interval, with bounds on a grid of
// 10^-k.
inline rat_interval sqrt_interval(const rat_interval& in, unsigned k) {
    const integer scale = pow10(k);
    const integer scale2 = scale * scale;
    integer lo_t = isqrt_floor(num(in.lo) * scale2 / den(in.lo));
    integer hi_t = isqrt_floor(num(in.hi) * scale2 / den(in.hi)) + 1;
    return {make_rational(lo_t, scale), make_rational(hi_t, scale)};
}

inline rat_interval scale_interval(const rat_interval& in, const rational& c) {
    if (c >= 0) return {in.lo * c, in.hi * c};
    return {in.hi * c, in.lo * c};
}

inline rat_interval raw_interval(const canonical_value& v, unsigned k) {
    if (const auto* s = std::get_if<simple_surd>(&v)) {
        rat_interval iv{rational(s->radicand()), rational(s->radicand())};
        for (unsigned i = 0; i < s->depth(); ++i) iv = sqrt_interval(iv, k);
        return scale_interval(iv, rational(s->sign()) * s->coeff());
    }
    const auto& q = std::get<quad_element>(v);
    rat_interval acc{0, 0};
    for (const auto& [mono, c] : q.terms()) {
        integer d = 1;
        for (const integer& p : mono) d *= p;
        rat_interval term = mono.empty() ? rat_interval{rational(1), rational(1)}
                                         : sqrt_interval({rational(d), rational(d)}, k);
        term = scale_interval(term, c);
        acc.lo += term.lo;
        acc.hi += term.hi;
    }
    return acc;
}

}  // namespace detail

// Enclosure with width <= 10^-digits.
inline rat_interval approx_interval(const canonical_value& v, unsigned digits) {
    for (unsigned k = digits + 8;; k *= 2) {
        rat_interval iv = detail::raw_interval(v, k);
        if ((iv.hi - iv.lo) * detail::pow10(digits) <= 1) return iv;
    }
}

// Exact sign: zero is decided structurally (canonical forms are unique), a
// nonzero value separates from 0 at some finite precision.
inline int sign_of(const canonical_value& v) {
    if (is_zero(v)) return 0;
    if (const auto* s = std::get_if<simple_surd>(&v)) return s->sign();
    for (unsigned k = 8;; k *= 2) {
        rat_interval iv = detail::raw_interval(v, k);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
    }
}

// Exact three-way comparison: structural equality first, then interval
// refinement (terminates because distinct canonical values are distinct
// reals).
inline int compare(const canonical_value& a, const canonical_value& b) {
    if (a == b) return 0;
    for (unsigned k = 8;; k *= 2) {
        rat_interval ia = detail::raw_interval(a, k);
        rat_interval ib = detail::raw_interval(b, k);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
    }
}

namespace detail {

inline unsigned decimal_digit_count(const integer& n) {
    return static_cast<unsigned>(n.str().size());
}

// Round a positive rational to `digits` significant digits (ties to even)
// and print it as a plain decimal.
inline std::string round_positive_decimal(const rational& r, unsigned digits) {
    // decimal exponent e with 10^e <= r < 10^(e+1)
    long long e = static_cast<long long>(decimal_digit_count(num(r))) -
                  static_cast<long long>(decimal_digit_count(den(r)));
    while (r >= rat_pow10(e + 1)) ++e;
    while (r < rat_pow10(e)) --e;

    // t = round(r * 10^(digits-1-e)), an integer with exactly `digits` digits
    long long shift = static_cast<long long>(digits) - 1 - e;
    integer x = num(r), y = den(r);
    if (shift >= 0)
        x *= pow10(static_cast<unsigned>(shift));
    else
        y *= pow10(static_cast<unsigned>(-shift));
    integer t = x / y;
    integer rem = x - t * y;
    integer twice = rem * 2;
    if (twice > y || (twice == y && (t & 1) == 1)) ++t;
    if (t == pow10(digits)) {
        t = pow10(digits - 1);
        ++e;
    }

    std::string s = t.str();
    if (e >= 0) {
        auto int_digits = static_cast<std::size_t>(e) + 1;
        if (int_digits >= s.size()) return s + std::string(int_digits - s.size(), '0');
        return s.substr(0, int_digits) + "." + s.substr(int_digits);
    }
    return "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + s;
}

}  // namespace detail

// Correctly rounded plain-decimal approximation with `digits` significant
// digits. Exact for rationals; for irrationals the enclosure is refined until
// both endpoints round identically (an irrational value never sits on a
// rounding boundary, so this terminates).
inline std::string to_decimal_string(const canonical_value& v, unsigned digits) {
    if (digits < 1) throw domain_error("to_decimal_string: digits must be >= 1");
    if (is_zero(v)) return "0";
    int sgn = sign_of(v);
    std::string prefix = sgn < 0 ? "-" : "";
    if (is_rational_value(v)) {
        rational a = boost::multiprecision::abs(as_rational(v));
        return prefix + detail::round_positive_decimal(a, digits);
    }
    for (unsigned k = digits + 10;; k *= 2) {
        rat_interval iv = detail::raw_interval(v, k);
        if (sgn < 0) iv = {-iv.hi, -iv.lo};
        if (iv.lo <= 0) continue;
        std::string lo_s = detail::round_positive_decimal(iv.lo, digits);
        std::string hi_s = detail::round_positive_decimal(iv.hi, digits);
        if (lo_s == hi_s) return prefix + lo_s;
    }
}

}  // namespace surdx
