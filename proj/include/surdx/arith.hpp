#pragma once

#include <algorithm>

#include "surdx/approx.hpp"

namespace surdx {

enum class arith_op { add, sub, mul, div };

canonical_value arith(const canonical_value& x, const canonical_value& y, arith_op op);
canonical_value sqrt_value(const canonical_value& x);

inline canonical_value negate(const canonical_value& v) {
    if (const auto* s = std::get_if<simple_surd>(&v))
        return detail::raw_access::make_simple(-s->sign(), s->coeff(), s->radicand(),
                                               s->depth());
    term_map t = std::get<quad_element>(v).terms();
    for (auto& [mono, c] : t) c = -c;
    return detail::raw_access::make_quad(std::move(t));
}

namespace detail {

// depth <= 1 simple surd as a term map over prime monomials
inline term_map embed_terms(const simple_surd& s) {
    rational c = rational(s.sign()) * s.coeff();
    if (s.depth() == 0) return {{monomial{}, c}};
    monomial mono;
    for (const auto& [p, e] : factor_map(s.radicand())) mono.push_back(p);
    return {{std::move(mono), c}};
}

inline term_map quad_addsub(const term_map& a, const term_map& b, bool subtract) {
    term_map out = a;
    for (const auto& [mono, c] : b) {
        rational& slot = out[mono];
        if (subtract)
            slot -= c;
        else
            slot += c;
        if (slot == 0) out.erase(mono);
    }
    return out;
}

// sqrt(p)*sqrt(p) = p: shared primes leave the monomial and multiply the
// coefficient; the rest is the symmetric difference.
inline term_map quad_mul(const term_map& a, const term_map& b) {
    term_map out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            monomial mono;
            rational c = ca * cb;
            auto ia = ma.begin();
            auto ib = mb.begin();
            while (ia != ma.end() && ib != mb.end()) {
                if (*ia == *ib) {
                    c *= rational(*ia);
                    ++ia;
                    ++ib;
                } else if (*ia < *ib) {
                    mono.push_back(*ia++);
                } else {
                    mono.push_back(*ib++);
                }
            }
            mono.insert(mono.end(), ia, ma.end());
            mono.insert(mono.end(), ib, mb.end());
            rational& slot = out[mono];
            slot += c;
            if (slot == 0) out.erase(mono);
        }
    }
    return out;
}

// Inverse by conjugation: write the element as beta + gamma*sqrt(p) for some
// basis prime p, multiply by the conjugate and recurse on the smaller field.
inline term_map quad_inverse(const term_map& a) {
    if (a.empty()) throw division_by_zero();
    if (a.size() == 1 && a.begin()->first.empty())
        return {{monomial{}, checked_div(1, a.begin()->second)}};

    integer p = a.rbegin()->first.back();
    term_map beta, gamma;
    for (const auto& [mono, c] : a) {
        if (std::binary_search(mono.begin(), mono.end(), p)) {
            monomial rest;
            for (const integer& q : mono)
                if (q != p) rest.push_back(q);
            gamma.emplace(std::move(rest), c);
        } else {
            beta.emplace(mono, c);
        }
    }
    const term_map p_value{{monomial{}, rational(p)}};
    const term_map sqrt_p{{monomial{p}, rational(1)}};
    term_map norm =
        quad_addsub(quad_mul(beta, beta), quad_mul(quad_mul(gamma, gamma), p_value), true);
    term_map conj = quad_addsub(beta, quad_mul(gamma, sqrt_p), true);
    return quad_mul(conj, quad_inverse(norm));
}

inline canonical_value simple_mul(const simple_surd& a, const simple_surd& b) {
    if (a.depth() == 0) return detail::scaled(b, rational(a.sign()) * a.coeff());
    if (b.depth() == 0) return detail::scaled(a, rational(b.sign()) * b.coeff());
    unsigned d = std::max(a.depth(), b.depth());
    integer ra = boost::multiprecision::pow(a.radicand(), 1u << (d - a.depth()));
    integer rb = boost::multiprecision::pow(b.radicand(), 1u << (d - b.depth()));
    return canonical_simple(a.sign() * b.sign(), a.coeff() * b.coeff(), rational(ra * rb), d);
}

inline canonical_value simple_div(const simple_surd& a, const simple_surd& b) {
    canonical_value inv = canonical_simple(b.sign(), 1 / b.coeff(),
                                           make_rational(1, b.radicand()), b.depth());
    return simple_mul(a, std::get<simple_surd>(inv));
}

inline canonical_value simple_addsub(const simple_surd& a, const simple_surd& b,
                                     bool subtract) {
    // similar terms: x +- y = y * (x/y +- 1) whenever x/y is rational
    canonical_value ratio = simple_div(a, b);
    if (is_rational_value(ratio)) {
        rational f = as_rational(ratio) + (subtract ? -1 : 1);
        if (f == 0) return quad_element{};
        return detail::scaled(b, f);
    }
    if (a.depth() <= 1 && b.depth() <= 1)
        return canonical_quad(quad_addsub(embed_terms(a), embed_terms(b), subtract));
    throw not_representable("sum of deep surds lies outside the supported forms");
}

}  // namespace detail

inline canonical_value arith(const canonical_value& x, const canonical_value& y, arith_op op) {
    if (op == arith_op::div) {
        if (is_zero(y)) throw division_by_zero();
        if (is_zero(x)) return quad_element{};
    } else if (op == arith_op::mul) {
        if (is_zero(x) || is_zero(y)) return quad_element{};
    } else {
        if (is_zero(y)) return x;
        if (is_zero(x)) return op == arith_op::sub ? negate(y) : y;
    }

    const auto* sx = std::get_if<simple_surd>(&x);
    const auto* sy = std::get_if<simple_surd>(&y);

    if (sx && sy) {
        switch (op) {
            case arith_op::add: return detail::simple_addsub(*sx, *sy, false);
            case arith_op::sub: return detail::simple_addsub(*sx, *sy, true);
            case arith_op::mul: return detail::simple_mul(*sx, *sy);
            case arith_op::div: return detail::simple_div(*sx, *sy);
        }
        throw error("unreachable arithmetic dispatch");
    }

    if ((sx && sx->depth() >= 2) || (sy && sy->depth() >= 2))
        throw not_representable(
            "mixing a deep surd with a composite value lies outside the supported forms");

    term_map tx = sx ? detail::embed_terms(*sx) : std::get<quad_element>(x).terms();
    term_map ty = sy ? detail::embed_terms(*sy) : std::get<quad_element>(y).terms();
    switch (op) {
        case arith_op::add: return canonical_quad(detail::quad_addsub(tx, ty, false));
        case arith_op::sub: return canonical_quad(detail::quad_addsub(tx, ty, true));
        case arith_op::mul: return canonical_quad(detail::quad_mul(tx, ty));
        case arith_op::div:
            return canonical_quad(detail::quad_mul(tx, detail::quad_inverse(ty)));
    }
    throw error("unreachable arithmetic dispatch");
}

inline canonical_value operator+(const canonical_value& x, const canonical_value& y) {
    return arith(x, y, arith_op::add);
}
inline canonical_value operator-(const canonical_value& x, const canonical_value& y) {
    return arith(x, y, arith_op::sub);
}
inline canonical_value operator*(const canonical_value& x, const canonical_value& y) {
    return arith(x, y, arith_op::mul);
}
inline canonical_value operator/(const canonical_value& x, const canonical_value& y) {
    return arith(x, y, arith_op::div);
}

// x^(2^k) by repeated squaring; closed for both canonical forms.
inline canonical_value pow2k(const canonical_value& x, unsigned k) {
    canonical_value acc = x;
    for (unsigned i = 0; i < k; ++i) acc = arith(acc, acc, arith_op::mul);
    return acc;
}

// Exact square root where one exists inside the canonical forms:
//   rational          -> surd of depth <= 1
//   simple surd       -> depth + 1, then re-minimized
//   a + b*sqrt(D)     -> sqrt(x) +- sqrt(y) with x+y = a, xy = b^2*D/4,
//                        possible iff a^2 - b^2*D is a perfect rational square
inline canonical_value sqrt_value(const canonical_value& x) {
    if (is_zero(x)) return x;
    if (sign_of(x) < 0) throw negative_radicand();

    if (const auto* s = std::get_if<simple_surd>(&x)) {
        if (s->depth() > 24) throw domain_error("surd nesting depth exceeds the supported limit");
        rational rad = pow_rational(s->coeff(), 1ull << s->depth()) * rational(s->radicand());
        return canonical_simple(1, 1, rad, s->depth() + 1);
    }

    const auto& q = std::get<quad_element>(x);
    if (q.terms().size() == 2 && q.terms().begin()->first.empty()) {
        const rational& a = q.terms().begin()->second;
        const auto& [mono, b] = *std::next(q.terms().begin());
        integer d = 1;
        for (const integer& p : mono) d *= p;
        rational disc = a * a - b * b * rational(d);
        if (disc >= 0 && is_perfect_square(disc)) {
            rational c = sqrt_exact(disc);
            canonical_value r1 = canonical_simple(1, 1, (a + c) / 2, 1);
            canonical_value r2 = canonical_simple(1, 1, (a - c) / 2, 1);
            return arith(r1, r2, b > 0 ? arith_op::add : arith_op::sub);
        }
        throw not_representable("denesting discriminant is not a rational square");
    }
    throw not_representable("no exact square root within the supported forms");
}

// --- rationality and commensurability predicates ---------------------------

// x is a rational multiple of the unit (the strict sense).
inline bool rational_in_length(const canonical_value& x) {
    if (sign_of(x) <= 0) throw domain_error("rational_in_length: value must be positive");
    return is_rational_value(x);
}

// x^2 is rational (the wider sense that also admits values like sqrt(2)).
inline bool rational_in_power(const canonical_value& x) {
    if (sign_of(x) <= 0) throw domain_error("rational_in_power: value must be positive");
    return is_rational_value(pow2k(x, 1));
}

// x/y rational. A representation failure in the quotient proves the ratio
// irrational (a rational ratio forces both operands into one common form).
inline bool commensurable_in_length(const canonical_value& x, const canonical_value& y) {
    if (is_zero(x) || is_zero(y))
        throw domain_error("commensurability requires nonzero operands");
    try {
        return is_rational_value(arith(x, y, arith_op::div));
    } catch (const not_representable&) {
        return false;
    }
}

// x^2/y^2 rational.
inline bool commensurable_in_power(const canonical_value& x, const canonical_value& y) {
    if (is_zero(x) || is_zero(y))
        throw domain_error("commensurability requires nonzero operands");
    try {
        return is_rational_value(arith(pow2k(x, 1), pow2k(y, 1), arith_op::div));
    } catch (const not_representable&) {
        return false;
    }
}

}  // namespace surdx
