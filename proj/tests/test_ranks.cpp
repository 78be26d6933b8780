#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "surdx/surdx.hpp"

using namespace surdx;

namespace {

canonical_value val(const std::string& text) { return normalize(parse_expr(text)); }

// independent oracle: the minimal number of squarings that lands in the
// rationals, computed without touching the stored depth
unsigned rank_by_squaring(const canonical_value& x) {
    canonical_value v = x;
    unsigned n = 0;
    while (!is_rational_value(v)) {
        v = arith(v, v, arith_op::mul);
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("rank of simple surds") {
    CHECK(rank(val("5")) == 0);
    CHECK(rank(val("sqrt(2)")) == 1);
    CHECK(rank(val("sqrt(2 * sqrt(2))")) == 2);
    CHECK(rank(val("sqrt(sqrt(2))")) == 2);
    CHECK(rank(val("sqrt(sqrt(sqrt(5)))")) == 3);

    CHECK_THROWS_AS(rank(val("1 + sqrt(2)")), domain_error);
    CHECK_THROWS_AS(rank(canonical(0)), domain_error);
    CHECK_THROWS_AS(rank(canonical(-3)), domain_error);
}

TEST_CASE("rank equals the squaring oracle") {
    split_mix64 g{64};
    for (int i = 0; i < 200; ++i) {
        canonical_value v = canonical_simple(1, gen::random_rational(g, 9, 4),
                                             rational(integer(g.below(50) + 2)),
                                             static_cast<unsigned>(g.below(5)));
        CHECK(rank(v) == rank_by_squaring(v));
    }
}

TEST_CASE("rank is invariant under positive rational scaling") {
    split_mix64 g{65};
    for (int i = 0; i < 200; ++i) {
        canonical_value v = canonical_simple(1, gen::random_rational(g, 9, 4),
                                             rational(integer(g.below(50) + 2)),
                                             static_cast<unsigned>(g.below(5)));
        rational q = gen::random_rational(g, 40, 7);
        CHECK(rank(arith(canonical(q), v, arith_op::mul)) == rank(v));
    }
}

TEST_CASE("the X.115 ladder for base 2 matches the listed terms") {
    rank_sequence seq = x115_sequence(2, 3);
    REQUIRE(seq.terms.size() == 3);

    CHECK(canonical_value(seq.terms[0]) == val("sqrt(2)"));
    CHECK(canonical_value(seq.terms[1]) == val("sqrt(2 * sqrt(2))"));
    CHECK(canonical_value(seq.terms[2]) == val("sqrt(2 * sqrt(2 * sqrt(2)))"));

    // u2 = 2^(3/4), u3 = 2^(7/8) in canonical form
    CHECK(seq.terms[1].radicand() == 8);
    CHECK(seq.terms[1].depth() == 2);
    CHECK(seq.terms[2].radicand() == 128);
    CHECK(seq.terms[2].depth() == 3);

    for (unsigned n = 0; n < 3; ++n) CHECK(rank(canonical_value(seq.terms[n])) == n + 1);

    // closed form u_n = 2^((2^n - 1)/2^n), checked at the top of a depth-8 run
    rank_sequence deep = x115_sequence(2, 8);
    CHECK(deep.terms[7].radicand() == boost::multiprecision::pow(integer(2), 255));
    CHECK(deep.terms[7].depth() == 8);
    CHECK(deep.terms[7].coeff() == 1);
}

TEST_CASE("ladder invariants across bases") {
    for (const rational& b : {rational(2), rational(3), rational(5), make_rational(1, 2)}) {
        rank_sequence seq = x115_sequence(b, 6);
        canonical_value b_val = canonical(b);
        canonical_value unit = canonical(1);
        canonical_value prev = unit;
        for (unsigned i = 0; i < seq.terms.size(); ++i) {
            canonical_value u(seq.terms[i]);
            CHECK(pow2k(u, 1) == arith(b_val, prev, arith_op::mul));  // u_{n+1}^2 = b u_n
            CHECK(seq.areas[i] == arith(b_val, u, arith_op::mul));    // s_n = b u_n
            if (i + 1 < seq.terms.size())
                CHECK(seq.areas[i] == pow2k(canonical_value(seq.terms[i + 1]), 1));
            CHECK(rank(u) == i + 1);
            CHECK_FALSE(commensurable_in_length(u, prev));
            CHECK_FALSE(commensurable_in_length(u, unit));
            prev = u;
        }
    }
}

TEST_CASE("ladder preconditions") {
    CHECK_THROWS_AS(x115_sequence(4, 2), domain_error);   // sqrt(4) = 2 is rational
    CHECK_THROWS_AS(x115_sequence(make_rational(9, 4), 2), domain_error);
    CHECK_THROWS_AS(x115_sequence(0, 2), domain_error);
    CHECK_THROWS_AS(x115_sequence(2, 0), domain_error);
    CHECK_THROWS_AS(x115_sequence(2, 17), domain_error);  // beyond the depth cap
    CHECK_NOTHROW(x115_sequence(2, 4, 4));
    CHECK_THROWS_AS(x115_sequence(2, 5, 4), domain_error);
}

TEST_CASE("ladder at the full default cap") {
    rank_sequence seq = x115_sequence(make_rational(1, 2), 16);
    REQUIRE(seq.terms.size() == 16);
    CHECK(rank(canonical_value(seq.terms[15])) == 16);
    CHECK(pow2k(canonical_value(seq.terms[15]), 1) ==
          arith(canonical(make_rational(1, 2)), canonical_value(seq.terms[14]),
                arith_op::mul));
}

TEST_CASE("area recurrence agrees with the closed form") {
    // s1 = 2*sqrt(2) and s2 = sqrt(4 * s1) = 2 * 2^(3/4)
    rank_sequence seq = x115_sequence(2, 2);
    CHECK(seq.areas[0] == val("2 * sqrt(2)"));
    CHECK(seq.areas[1] == sqrt_value(val("4 * 2 * sqrt(2)")));
    CHECK(seq.areas[1] == val("2 * sqrt(2 * sqrt(2))"));

    CHECK(s_recurrence_check(2, 1));
    CHECK(s_recurrence_check(2, 2));
    CHECK(s_recurrence_check(3, 3));

    for (const rational& b : {rational(2), rational(3), rational(5), make_rational(1, 2)})
        for (unsigned n = 1; n <= 8; ++n) CHECK(s_recurrence_check(b, n));
}
