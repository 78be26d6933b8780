#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "surdx/surdx.hpp"

using namespace surdx;

namespace {

// deterministic corpus of parser-producible trees
expr_ptr random_tree(split_mix64& g, unsigned depth) {
    if (depth == 0 || g.below(3) == 0) {
        if (g.below(4) == 0) {
            // decimal constant with up to three fractional digits
            integer scale = boost::multiprecision::pow(integer(10), 1 + g.below(3));
            return expr::constant(make_rational(integer(g.below(5000)), scale));
        }
        return expr::constant(rational(integer(g.below(1000))));
    }
    switch (g.below(5)) {
        case 0: return expr::add(random_tree(g, depth - 1), random_tree(g, depth - 1));
        case 1: return expr::sub(random_tree(g, depth - 1), random_tree(g, depth - 1));
        case 2: return expr::mul(random_tree(g, depth - 1), random_tree(g, depth - 1));
        case 3: {
            expr_ptr l = random_tree(g, depth - 1);
            for (;;) {
                expr_ptr r = random_tree(g, depth - 1);
                if (r->kind() != expr::node_kind::constant || r->constant_value() != 0)
                    return expr::div(std::move(l), std::move(r));
            }
        }
        default: return expr::sqrt(random_tree(g, depth - 1));
    }
}

}  // namespace

TEST_CASE("parsing the worked examples") {
    expr_ptr e = parse_expr("sqrt(2 + sqrt(3))");
    REQUIRE(e->kind() == expr::node_kind::sqrt);
    REQUIRE(e->operand()->kind() == expr::node_kind::add);
    CHECK(e->operand()->lhs()->kind() == expr::node_kind::constant);
    CHECK(e->operand()->lhs()->constant_value() == 2);
    CHECK(e->operand()->rhs()->kind() == expr::node_kind::sqrt);

    // the first generator recipe at n = 2, written out
    canonical_value v = normalize(parse_expr("2 + sqrt(2*2 - 2*2/4)"));
    CHECK(v == make_binomial(1, 2).value());

    try {
        parse_expr("sqrt(2");
        FAIL("expected a syntax error");
    } catch (const parse_error& err) {
        CHECK(err.position() == 6);
        CHECK(err.expected() == "')'");
    }
}

TEST_CASE("whitespace and precedence") {
    CHECK(structurally_equal(parse_expr("  1+2 *  3 "), parse_expr("1 + (2 * 3)")));
    CHECK(structurally_equal(parse_expr("1 - 2 - 3"), parse_expr("(1 - 2) - 3")));
    CHECK(structurally_equal(parse_expr("8 / 2 / 2"), parse_expr("(8 / 2) / 2")));
    CHECK(normalize(parse_expr("8 / 2 / 2")) == canonical(2));
    CHECK(normalize(parse_expr("(1 + 2) * 3")) == canonical(9));
    CHECK(normalize(parse_expr("1 + 2 * 3")) == canonical(7));
}

TEST_CASE("decimal literals become exact fractions") {
    CHECK(parse_expr("0.5")->constant_value() == make_rational(1, 2));
    CHECK(parse_expr("1.25")->constant_value() == make_rational(5, 4));
    CHECK(parse_expr("10.000")->constant_value() == 10);
    CHECK_THROWS_AS(parse_expr("1."), parse_error);
    // leading zeros in either part must stay decimal, never octal
    CHECK(parse_expr("2.026")->constant_value() == make_rational(2026, 1000));
    CHECK(parse_expr("007")->constant_value() == 7);
    CHECK(parse_expr("0.08")->constant_value() == make_rational(2, 25));
}

TEST_CASE("grammar rejections") {
    CHECK_THROWS_AS(parse_expr("-1"), parse_error);  // no unary minus
    CHECK_THROWS_AS(parse_expr("1 + "), parse_error);
    CHECK_THROWS_AS(parse_expr("(1 + 2"), parse_error);
    CHECK_THROWS_AS(parse_expr("cbrt(8)"), parse_error);
    CHECK_THROWS_AS(parse_expr("1 2"), parse_error);
    CHECK_THROWS_AS(parse_expr(""), parse_error);
    CHECK_THROWS_AS(parse_expr("sqrt 2"), parse_error);
    // a syntactic zero denominator is a domain error, not a syntax error
    CHECK_THROWS_AS(parse_expr("1/0"), division_by_zero);
    CHECK_THROWS_AS(parse_expr("1/0.0"), division_by_zero);
}

TEST_CASE("printing the worked examples") {
    CHECK(print_expr(expr::sqrt(expr::constant(2))) == "sqrt(2)");
    CHECK(print_expr(expr::add(expr::constant(2), expr::sqrt(expr::constant(3)))) ==
          "2 + sqrt(3)");
    CHECK(print_expr(expr::mul(expr::add(expr::constant(1), expr::constant(2)),
                               expr::constant(3))) == "(1 + 2) * 3");
    CHECK(print_expr(expr::sub(expr::constant(1),
                               expr::sub(expr::constant(2), expr::constant(3)))) ==
          "1 - (2 - 3)");
    CHECK(print_expr(expr::constant(make_rational(1, 2))) == "0.5");
    CHECK(print_expr(parse_expr("3/2 + 0.25")) == "3 / 2 + 0.25");
}

TEST_CASE("parse-print roundtrip over a 200-expression corpus") {
    split_mix64 g{20240601};
    int count = 0;
    while (count < 200) {
        expr_ptr e = random_tree(g, 1 + g.below(4));
        std::string printed = print_expr(e);
        expr_ptr reparsed = parse_expr(printed);
        CHECK(structurally_equal(e, reparsed));
        CHECK(print_expr(reparsed) == printed);
        ++count;
    }
}

TEST_CASE("rendered canonical values reparse to the same value") {
    const char* exprs[] = {"2 + sqrt(3)", "sqrt(2) - 1", "sqrt(2 * sqrt(2))",
                           "5/6",         "sqrt(8)",     "sqrt(2+sqrt(3))",
                           "0 - sqrt(2)", "3 * sqrt(50) / 7"};
    for (const char* text : exprs) {
        canonical_value v = normalize(parse_expr(text));
        CHECK(normalize(parse_expr(render_value(v))) == v);
    }
}

TEST_CASE("rational CLI arguments") {
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational("0.5") == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational("sqrt(2)"), domain_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
}
