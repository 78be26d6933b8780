#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "surdx/factor.hpp"

namespace surdx {

class simple_surd;
class quad_element;

// Canonical carrier for every exact value. Invariants:
//   zero                -> empty quad_element
//   nonzero single term -> simple_surd (rationals at depth 0)
//   sum of >= 2 terms   -> quad_element
// Canonical representatives are unique, so operator== decides semantic
// equality.
using canonical_value = std::variant<quad_element, simple_surd>;

// A monomial is a sorted set of distinct primes P; it denotes prod sqrt(p).
// Using prime radicands keeps the subset monomials linearly independent over
// the rationals, so a term map has exactly one representation per value.
using monomial = std::vector<integer>;
using term_map = std::map<monomial, rational>;

canonical_value canonical_simple(int sign, rational coeff, const rational& radicand,
                                 unsigned depth);
canonical_value canonical(const rational& q);
canonical_value canonical_quad(term_map terms);

namespace detail {
struct raw_access;
}

// sign * coeff * radicand^(1/2^depth), with
//   depth == 0  =>  radicand == 1 (the value is the rational sign*coeff)
//   depth >= 1  =>  radicand is an integer >= 2 that is not a perfect square
//                   and every prime exponent in it is < 2^depth
// so depth is minimal and the representation is unique.
class simple_surd {
public:
    int sign() const { return sign_; }
    const rational& coeff() const { return coeff_; }
    const integer& radicand() const { return radicand_; }
    unsigned depth() const { return depth_; }

    bool operator==(const simple_surd&) const = default;

private:
    simple_surd(int sign, rational coeff, integer radicand, unsigned depth)
        : sign_(sign), coeff_(std::move(coeff)), radicand_(std::move(radicand)), depth_(depth) {}

    friend struct detail::raw_access;

    int sign_ = 1;
    rational coeff_ = 1;
    integer radicand_ = 1;
    unsigned depth_ = 0;
};

// Element of Q(sqrt(p1),...,sqrt(pk)): sum over monomials S of
// coeff_S * prod_{p in S} sqrt(p). Sparse; no zero coefficients; the empty
// map denotes 0. The basis is implicit (union of primes over the monomials),
// so it is minimal by construction.
class quad_element {
public:
    quad_element() = default;  // zero

    const term_map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Sorted union of the primes appearing in the monomials.
    std::vector<integer> radicand_basis() const {
        std::vector<integer> basis;
        for (const auto& [mono, c] : terms_)
            for (const integer& p : mono) {
                auto it = std::lower_bound(basis.begin(), basis.end(), p);
                if (it == basis.end() || *it != p) basis.insert(it, p);
            }
        return basis;
    }

    bool operator==(const quad_element&) const = default;

private:
    explicit quad_element(term_map t) : terms_(std::move(t)) {}

    friend struct detail::raw_access;

    term_map terms_;
};

namespace detail {

struct raw_access {
    // Constructors for values already in canonical form.
    static simple_surd make_simple(int sign, rational coeff, integer radicand, unsigned depth) {
        return simple_surd(sign, std::move(coeff), std::move(radicand), depth);
    }
    static quad_element make_quad(term_map t) { return quad_element(std::move(t)); }
};

// Canonical-preserving rescale by a nonzero rational.
inline simple_surd scaled(const simple_surd& s, const rational& factor) {
    int sign = factor < 0 ? -s.sign() : s.sign();
    return raw_access::make_simple(sign, s.coeff() * boost::multiprecision::abs(factor),
                                   s.radicand(), s.depth());
}

}  // namespace detail

inline canonical_value canonical(const rational& q) {
    if (q == 0) return quad_element{};
    int sign = q < 0 ? -1 : 1;
    return detail::raw_access::make_simple(sign, boost::multiprecision::abs(q), 1, 0);
}

// Full normalization of sign * coeff * radicand^(1/2^depth):
// prime exponents of the radicand are reduced mod 2^depth (whole powers move
// into the coefficient), then depth is minimized.
inline canonical_value canonical_simple(int sign, rational coeff, const rational& radicand,
                                        unsigned depth) {
    if (coeff == 0) return quad_element{};
    if (radicand <= 0) throw negative_radicand("surd radicand must be positive");
    if (coeff < 0) {
        sign = -sign;
        coeff = -coeff;
    }
    if (depth == 0) return canonical(rational(sign) * coeff * radicand);
    if (depth > 31) throw domain_error("surd nesting depth exceeds the supported limit");

    std::map<integer, integer> exps;
    for (const auto& [p, e] : factor_map(num(radicand))) exps[p] += e;
    for (const auto& [p, e] : factor_map(den(radicand))) exps[p] -= e;

    const integer period = integer(1) << depth;
    std::map<integer, integer> reduced;
    for (const auto& [p, e] : exps) {
        integer k = e / period;
        integer s = e - k * period;
        if (s < 0) {
            s += period;
            k -= 1;
        }
        if (k > 0)
            coeff *= pow_rational(rational(p), k.convert_to<unsigned long long>());
        else if (k < 0)
            coeff /= pow_rational(rational(p), (-k).convert_to<unsigned long long>());
        if (s != 0) reduced[p] = s;
    }

    while (depth >= 1) {
        if (reduced.empty()) {
            depth = 0;
            break;
        }
        bool all_even = true;
        for (const auto& [p, e] : reduced)
            if ((e & 1) != 0) {
                all_even = false;
                break;
            }
        if (!all_even) break;
        for (auto& [p, e] : reduced) e >>= 1;  // nonzero even exponents stay nonzero
        --depth;
    }

    if (depth == 0) return detail::raw_access::make_simple(sign, std::move(coeff), 1, 0);

    integer rad = 1;
    for (const auto& [p, e] : reduced)
        rad *= boost::multiprecision::pow(p, e.convert_to<unsigned>());
    return detail::raw_access::make_simple(sign, std::move(coeff), std::move(rad), depth);
}

// Collapse a raw term map to its canonical carrier.
inline canonical_value canonical_quad(term_map terms) {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    if (terms.empty()) return quad_element{};
    if (terms.size() == 1) {
        const auto& [mono, c] = *terms.begin();
        if (mono.empty()) return canonical(c);
        integer rad = 1;
        for (const integer& p : mono) rad *= p;
        int sign = c < 0 ? -1 : 1;
        return detail::raw_access::make_simple(sign, boost::multiprecision::abs(c),
                                               std::move(rad), 1);
    }
    return detail::raw_access::make_quad(std::move(terms));
}

inline bool is_zero(const canonical_value& v) {
    const auto* q = std::get_if<quad_element>(&v);
    return q != nullptr && q->empty();
}

inline bool is_rational_value(const canonical_value& v) {
    if (is_zero(v)) return true;
    const auto* s = std::get_if<simple_surd>(&v);
    return s != nullptr && s->depth() == 0;
}

inline rational as_rational(const canonical_value& v) {
    if (is_zero(v)) return 0;
    const auto& s = std::get<simple_surd>(v);
    if (s.depth() != 0) throw domain_error("as_rational: value is irrational");
    return rational(s.sign()) * s.coeff();
}

}  // namespace surdx
