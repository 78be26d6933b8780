#pragma once

#include <utility>

#include "surdx/arith.hpp"

namespace surdx {

// A line given by its square: the line's value is sqrt(square). A perfect
// square makes the line rational in length; the predicates detect that, the
// type allows it.
struct power_only_line {
    rational square;
};

enum class pair_sign { plus, minus };

// Ordered pair of power-only lines, joined by + (binomial) or - (apotome).
// Terms are commensurable in power by construction (both squares rational)
// and must not be commensurable in length.
class binomial_pair {
public:
    binomial_pair(power_only_line a, power_only_line b, pair_sign sign) : sign_(sign) {
        if (a.square <= 0 || b.square <= 0)
            throw domain_error("binomial terms must be positive");
        if (a.square < b.square) std::swap(a, b);  // order by value; sqrt is monotone
        if (is_perfect_square(checked_div(a.square, b.square)))
            throw domain_error(
                "terms commensurable in length do not form a binomial or apotome");
        greater_ = std::move(a);
        lesser_ = std::move(b);
    }

    const power_only_line& greater() const { return greater_; }
    const power_only_line& lesser() const { return lesser_; }
    pair_sign sign() const { return sign_; }

    // sqrt(greater.square) +- sqrt(lesser.square), a two-term element.
    canonical_value value() const {
        canonical_value g = sqrt_value(canonical(greater_.square));
        canonical_value l = sqrt_value(canonical(lesser_.square));
        return arith(g, l, sign_ == pair_sign::plus ? arith_op::add : arith_op::sub);
    }

    bool operator==(const binomial_pair& other) const {
        return sign_ == other.sign_ && greater_.square == other.greater_.square &&
               lesser_.square == other.lesser_.square;
    }

private:
    power_only_line greater_;
    power_only_line lesser_;
    pair_sign sign_;
};

struct taxonomy_class {
    enum class kind {
        rational_length,
        rational_power_only,
        simple_rank,
        binomial,
        apotome,
        unclassified
    };
    kind k = kind::unclassified;
    int species = 0;     // 1..6 for binomial/apotome
    unsigned rank = 0;   // 0 rational, 1 power-only, n >= 2 simple surds
    bool medial = false; // simple_rank of rank exactly 2
};

// Species 1..6. With a = value(greater), b = value(lesser), c = sqrt(a^2-b^2):
// the pair falls in {1,2,3} iff c is commensurable in length with a, in
// {4,5,6} otherwise; the slot within the triple is decided by which term (if
// any) is rational in length.
inline int classify_pair(const binomial_pair& p) {
    const rational& s1 = p.greater().square;
    const rational& s2 = p.lesser().square;
    rational csq = s1 - s2;
    bool c_comm_a = is_perfect_square(csq / s1);
    bool a_rational = is_perfect_square(s1);
    bool b_rational = is_perfect_square(s2);
    int slot = a_rational ? 1 : b_rational ? 2 : 3;
    return (c_comm_a ? 0 : 3) + slot;
}

// The six generator recipes, with n any positive rational:
//   1: n with sqrt(n^2 - n^2/4)        4: n with sqrt(n^2 - n^2/2)
//   2: sqrt(n^2 + n^2/3) with n        5: sqrt(2*n^2) with n
//   3: sqrt(n) with sqrt(n - n/4)      6: sqrt(n) with sqrt(n - n/2)
// Species 3 and 6 degenerate when n or the lesser radicand is a perfect
// square; those inputs are rejected.
inline binomial_pair make_pair_of_species(int species, const rational& n, pair_sign sign) {
    if (n <= 0) throw domain_error("generator requires n > 0");
    rational nsq = n * n;
    rational g, l;
    switch (species) {
        case 1: g = nsq; l = nsq - nsq / 4; break;
        case 2: g = nsq + nsq / 3; l = nsq; break;
        case 3: g = n; l = n - n / 4; break;
        case 4: g = nsq; l = nsq - nsq / 2; break;
        case 5: g = 2 * nsq; l = nsq; break;
        case 6: g = n; l = n - n / 2; break;
        default: throw domain_error("species must lie in 1..6");
    }
    if (species == 3 || species == 6) {
        if (is_perfect_square(n))
            throw domain_error("species " + std::to_string(species) +
                               " requires n that is not a perfect square");
        if (is_perfect_square(l))
            throw domain_error("species " + std::to_string(species) +
                               " degenerates: lesser radicand is a perfect square");
    }
    return binomial_pair({g}, {l}, sign);
}

inline binomial_pair make_binomial(int species, const rational& n) {
    return make_pair_of_species(species, n, pair_sign::plus);
}

inline binomial_pair make_apotome(int species, const rational& n) {
    return make_pair_of_species(species, n, pair_sign::minus);
}

namespace detail {

inline rational first_species_root(const binomial_pair& p) {
    if (classify_pair(p) != 1)
        throw domain_error("square-root extraction requires a first binomial or apotome");
    return sqrt_exact(p.greater().square);  // a is rational for the first species
}

}  // namespace detail

// Root of a + sqrt(B) (resp. a - sqrt(B)) via the II.5 identity: the parts x,
// y with x + y = a and x*y = B/4 satisfy (a/2 - y)^2 = (a/2)^2 - B/4, so the
// half-difference is the side of the gnomon square.
inline binomial_pair sqrt_first_by_ii5(const binomial_pair& p) {
    rational a = detail::first_species_root(p);
    const rational& b_sq = p.lesser().square;
    rational half = a / 2;
    rational gnomon_sq = half * half - b_sq / 4;
    rational offset = sqrt_exact(gnomon_sq);
    return binomial_pair({half + offset}, {half - offset}, p.sign());
}

// Same extraction by the computational route: the smaller part solves
// x^2 + B/4 = a*x, so completing the square gives x = (a - sqrt(a^2 - B))/2.
inline binomial_pair sqrt_first_by_quadratic(const binomial_pair& p) {
    rational a = detail::first_species_root(p);
    const rational& b_sq = p.lesser().square;
    rational disc = a * a - b_sq;
    rational root = sqrt_exact(disc);
    rational x = (a - root) / 2;
    return binomial_pair({a - x}, {x}, p.sign());
}

// Square root of a first binomial/apotome: both routes are computed and must
// agree; squaring the result reproduces the input exactly.
inline binomial_pair sqrt_first(const binomial_pair& p) {
    binomial_pair by_ii5 = sqrt_first_by_ii5(p);
    binomial_pair by_quadratic = sqrt_first_by_quadratic(p);
    if (!(by_ii5 == by_quadratic))
        throw error("sqrt_first: solution routes disagree");
    return by_ii5;
}

// x^4 rational while x^2 is not: the side of a square equal to a rectangle
// contained by power-only rationals commensurable in square only.
inline bool is_medial(const canonical_value& x) {
    if (sign_of(x) <= 0) throw domain_error("is_medial: value must be positive");
    return is_rational_value(pow2k(x, 2)) && !is_rational_value(pow2k(x, 1));
}

inline taxonomy_class classify(const canonical_value& x) {
    if (sign_of(x) <= 0) throw domain_error("classify: value must be positive");

    if (const auto* s = std::get_if<simple_surd>(&x)) {
        if (s->depth() == 0) return {taxonomy_class::kind::rational_length, 0, 0, false};
        if (s->depth() == 1) return {taxonomy_class::kind::rational_power_only, 0, 1, false};
        return {taxonomy_class::kind::simple_rank, 0, s->depth(), s->depth() == 2};
    }

    const auto& q = std::get<quad_element>(x);
    if (q.terms().size() != 2) return {};

    // two power-only terms t1 +- t2; squares of the terms are rational
    const auto& [m1, c1] = *q.terms().begin();
    const auto& [m2, c2] = *std::next(q.terms().begin());
    integer d1 = 1, d2 = 1;
    for (const integer& p : m1) d1 *= p;
    for (const integer& p : m2) d2 *= p;
    rational sq1 = c1 * c1 * rational(d1);
    rational sq2 = c2 * c2 * rational(d2);
    pair_sign sign = (c1 > 0 && c2 > 0) ? pair_sign::plus : pair_sign::minus;
    binomial_pair pair({sq1}, {sq2}, sign);
    int species = classify_pair(pair);
    bool is_binomial = sign == pair_sign::plus;
    return {is_binomial ? taxonomy_class::kind::binomial : taxonomy_class::kind::apotome,
            species, 0, false};
}

// Proposition X.17 split: the point x on a with x*(a-x) = bsq/4, taking the
// smaller part. The two commensurability verdicts are provably equal; the
// operation computes both and checks.
struct x17_result {
    canonical_value part;              // x, the smaller part
    bool commensurable_parts = false;  // x vs a - x
    bool commensurable_side = false;   // a vs sqrt(a^2 - bsq)
};

inline x17_result x17_split(const rational& a, const rational& bsq) {
    if (a <= 0 || bsq <= 0 || bsq >= a * a)
        throw domain_error("x17_split requires 0 < bsq < a^2");
    canonical_value side = sqrt_value(canonical(a * a - bsq));
    canonical_value a_val = canonical(a);
    canonical_value x = arith(arith(a_val, side, arith_op::sub), canonical(2), arith_op::div);
    canonical_value rest = arith(a_val, x, arith_op::sub);
    x17_result r;
    r.part = x;
    r.commensurable_parts = commensurable_in_length(x, rest);
    r.commensurable_side = commensurable_in_length(a_val, side);
    if (r.commensurable_parts != r.commensurable_side)
        throw error("x17_split: biconditional violated");
    return r;
}

}  // namespace surdx
