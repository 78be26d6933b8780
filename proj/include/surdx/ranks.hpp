#pragma once

#include <vector>

#include "surdx/arith.hpp"

namespace surdx {

// Radicand sizes double per step, so the ladder is capped well beyond any
// desk-scale use.
inline constexpr unsigned default_depth_cap = 16;

// The X.115 ladder over a base segment b commensurable with the unit:
// u_0 = 1 and u_{n+1}^2 = b * u_n, with the rectangle areas s_n = b * u_n.
struct rank_sequence {
    rational base;
    std::vector<simple_surd> terms;       // u_1 .. u_N
    std::vector<canonical_value> areas;   // s_1 .. s_N, s_n = b * u_n = u_{n+1}^2
};

// Minimal n with x^(2^n) rational: 0 for rationals, 1 for power-only
// rationals, 2 for medials, and so on. Defined for monomial values only.
inline unsigned rank(const canonical_value& x) {
    if (sign_of(x) <= 0) throw domain_error("rank: value must be positive");
    const auto* s = std::get_if<simple_surd>(&x);
    if (s == nullptr)
        throw domain_error("rank is defined only for simple (monomial) surds");
    return s->depth();
}

inline rank_sequence x115_sequence(const rational& b, unsigned count,
                                   unsigned depth_cap = default_depth_cap) {
    if (b <= 0) throw domain_error("x115_sequence requires a positive base");
    if (is_perfect_square(b))
        throw domain_error("x115_sequence: a square base collapses the sequence to rationals");
    if (count < 1) throw domain_error("x115_sequence requires count >= 1");
    if (count > depth_cap)
        throw domain_error("x115_sequence: count exceeds the depth cap of " +
                           std::to_string(depth_cap));

    rank_sequence seq;
    seq.base = b;
    canonical_value b_val = canonical(b);
    canonical_value u = canonical(1);
    for (unsigned n = 1; n <= count; ++n) {
        canonical_value area = arith(b_val, u, arith_op::mul);
        u = sqrt_value(area);
        seq.terms.push_back(std::get<simple_surd>(u));
        seq.areas.push_back(arith(b_val, u, arith_op::mul));
    }
    return seq;
}

// Cross-check of the area recurrence: the directly built s_n must equal both
// sqrt(b^2 * s_{n-1}) and the closed form (b^(2^n) * s_{n-1}^(2^(n-1)))^(1/2^n).
inline bool s_recurrence_check(const rational& b, unsigned n,
                               unsigned depth_cap = default_depth_cap) {
    if (n < 1) throw domain_error("s_recurrence_check requires n >= 1");
    rank_sequence seq = x115_sequence(b, n, depth_cap);
    canonical_value s_n = seq.areas[n - 1];
    canonical_value s_prev = n >= 2 ? seq.areas[n - 2] : canonical(b);  // s_0 = b * u_0 = b

    canonical_value via_sqrt =
        sqrt_value(arith(canonical(b * b), s_prev, arith_op::mul));

    canonical_value closed = arith(canonical(pow_rational(b, 1ull << n)),
                                   pow2k(s_prev, n - 1), arith_op::mul);
    for (unsigned i = 0; i < n; ++i) closed = sqrt_value(closed);

    return s_n == via_sqrt && s_n == closed;
}

}  // namespace surdx
