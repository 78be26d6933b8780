#include <catch2/catch_amalgamated.hpp>

#include "surdx/factor.hpp"
#include "surdx/verify.hpp"

using namespace surdx;

TEST_CASE("rational arithmetic is exact") {
    CHECK(make_rational(1, 2) + make_rational(1, 3) == make_rational(5, 6));
    CHECK(make_rational(3, 4) * make_rational(4, 3) == 1);
    CHECK_THROWS_AS(checked_div(rational(5), rational(0)), division_by_zero);
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, 4) == make_rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), division_by_zero);
}

TEST_CASE("rationals stay reduced with positive denominators") {
    split_mix64 g{2024};
    for (int i = 0; i < 1000; ++i) {
        integer n(g.below(2000));
        integer d(g.below(1999) + 1);
        rational q = make_rational(n - 1000, d);
        CHECK(den(q) > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(num(q)), den(q)) == 1);
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    split_mix64 g{7};
    auto draw = [&g] {
        return make_rational(integer(g.below(400)) - 200, integer(g.below(40)) + 1);
    };
    for (int i = 0; i < 1000; ++i) {
        rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("comparison is a total order consistent with real values") {
    CHECK(make_rational(1, 3) < make_rational(1, 2));
    CHECK(make_rational(-1, 2) < make_rational(-1, 3));
    CHECK(make_rational(7, 7) == 1);
}

TEST_CASE("squarefree decomposition matches the worked cases") {
    auto d12 = squarefree_decompose(12);
    CHECK(d12.square_part == 2);
    CHECK(d12.squarefree_num == 3);
    CHECK(d12.squarefree_den == 1);

    auto d34 = squarefree_decompose(make_rational(3, 4));
    CHECK(d34.square_part == make_rational(1, 2));
    CHECK(d34.squarefree_num == 3);
    CHECK(d34.squarefree_den == 1);

    auto d1 = squarefree_decompose(1);
    CHECK(d1.square_part == 1);
    CHECK(d1.squarefree_num == 1);
    CHECK(d1.squarefree_den == 1);

    CHECK_THROWS_AS(squarefree_decompose(0), domain_error);
    CHECK_THROWS_AS(squarefree_decompose(-4), domain_error);
}

TEST_CASE("squarefree decomposition recomposes its input") {
    split_mix64 g{99};
    for (int i = 0; i < 1000; ++i) {
        rational q = make_rational(integer(g.below(5000)) + 1, integer(g.below(500)) + 1);
        auto d = squarefree_decompose(q);
        CHECK(d.square_part > 0);
        CHECK(d.square_part * d.square_part *
                  make_rational(d.squarefree_num, d.squarefree_den) ==
              q);
        // the squarefree pair is coprime and squarefree
        CHECK(boost::multiprecision::gcd(d.squarefree_num, d.squarefree_den) == 1);
        for (const auto& [p, e] : factor_map(d.squarefree_num)) CHECK(e == 1);
        for (const auto& [p, e] : factor_map(d.squarefree_den)) CHECK(e == 1);
    }
}

TEST_CASE("perfect-square test") {
    CHECK(is_perfect_square(make_rational(9, 4)));
    CHECK_FALSE(is_perfect_square(rational(10)));
    CHECK(is_perfect_square(rational(0)));
    CHECK_FALSE(is_perfect_square(rational(-4)));

    split_mix64 g{123};
    for (int i = 0; i < 1000; ++i) {
        rational q = make_rational(integer(g.below(3000)) + 1, integer(g.below(300)) + 1);
        auto d = squarefree_decompose(q);
        bool square_by_decomp = d.squarefree_num == 1 && d.squarefree_den == 1;
        CHECK(is_perfect_square(q) == square_by_decomp);
    }
}

TEST_CASE("factorization handles prime powers and semiprimes") {
    integer big = boost::multiprecision::pow(integer(3), 255);
    auto fm = factor_map(big);
    REQUIRE(fm.size() == 1);
    CHECK(fm.at(3) == 255);

    // both factors above the trial-division bound
    integer p("1000003"), q("1000033");
    auto fm2 = factor_map(p * q);
    REQUIRE(fm2.size() == 2);
    CHECK(fm2.at(p) == 1);
    CHECK(fm2.at(q) == 1);

    CHECK(is_probable_prime(p));
    CHECK_FALSE(is_probable_prime(p * q));
    CHECK(factor_map(1).empty());

    split_mix64 g{5};
    for (int i = 0; i < 200; ++i) {
        integer n(g.below(100000) + 1);
        integer rebuilt = 1;
        for (const auto& [f, e] : factor_map(n)) {
            CHECK(is_probable_prime(f));
            rebuilt *= boost::multiprecision::pow(f, e);
        }
        CHECK(rebuilt == n);
    }
}

TEST_CASE("exact rational square roots") {
    CHECK(sqrt_exact(make_rational(9, 4)) == make_rational(3, 2));
    CHECK(sqrt_exact(rational(0)) == 0);
    CHECK_THROWS_AS(sqrt_exact(rational(10)), domain_error);
    CHECK_THROWS_AS(sqrt_exact(rational(-1)), negative_radicand);
}
