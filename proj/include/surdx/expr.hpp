#pragma once

#include <memory>
#include <utility>

#include "surdx/arith.hpp"

namespace surdx {

class expr;
using expr_ptr = std::shared_ptr<const expr>;

// Immutable expression tree over {rational constants, +, -, *, /, sqrt}.
class expr {
public:
    enum class node_kind { constant, add, sub, mul, div, sqrt };

    static expr_ptr constant(rational value) {
        return expr_ptr(new expr(node_kind::constant, std::move(value), nullptr, nullptr));
    }
    static expr_ptr add(expr_ptr l, expr_ptr r) {
        return binary(node_kind::add, std::move(l), std::move(r));
    }
    static expr_ptr sub(expr_ptr l, expr_ptr r) {
        return binary(node_kind::sub, std::move(l), std::move(r));
    }
    static expr_ptr mul(expr_ptr l, expr_ptr r) {
        return binary(node_kind::mul, std::move(l), std::move(r));
    }
    static expr_ptr div(expr_ptr l, expr_ptr r) {
        // a syntactic zero denominator is rejected at construction
        if (r->kind() == node_kind::constant && r->constant_value() == 0)
            throw division_by_zero();
        return binary(node_kind::div, std::move(l), std::move(r));
    }
    static expr_ptr sqrt(expr_ptr operand) {
        return expr_ptr(new expr(node_kind::sqrt, 0, std::move(operand), nullptr));
    }

    node_kind kind() const { return kind_; }
    const rational& constant_value() const { return value_; }
    const expr_ptr& lhs() const { return a_; }
    const expr_ptr& rhs() const { return b_; }
    const expr_ptr& operand() const { return a_; }

private:
    static expr_ptr binary(node_kind k, expr_ptr l, expr_ptr r) {
        return expr_ptr(new expr(k, 0, std::move(l), std::move(r)));
    }
    expr(node_kind k, rational v, expr_ptr a, expr_ptr b)
        : kind_(k), value_(std::move(v)), a_(std::move(a)), b_(std::move(b)) {}

    node_kind kind_;
    rational value_;
    expr_ptr a_;
    expr_ptr b_;
};

inline bool structurally_equal(const expr& x, const expr& y) {
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
        case expr::node_kind::constant: return x.constant_value() == y.constant_value();
        case expr::node_kind::sqrt: return structurally_equal(*x.operand(), *y.operand());
        default:
            return structurally_equal(*x.lhs(), *y.lhs()) &&
                   structurally_equal(*x.rhs(), *y.rhs());
    }
}

inline bool structurally_equal(const expr_ptr& x, const expr_ptr& y) {
    return structurally_equal(*x, *y);
}

// Exact evaluation into the canonical forms.
inline canonical_value normalize(const expr& e) {
    switch (e.kind()) {
        case expr::node_kind::constant: return canonical(e.constant_value());
        case expr::node_kind::add:
            return arith(normalize(*e.lhs()), normalize(*e.rhs()), arith_op::add);
        case expr::node_kind::sub:
            return arith(normalize(*e.lhs()), normalize(*e.rhs()), arith_op::sub);
        case expr::node_kind::mul:
            return arith(normalize(*e.lhs()), normalize(*e.rhs()), arith_op::mul);
        case expr::node_kind::div:
            return arith(normalize(*e.lhs()), normalize(*e.rhs()), arith_op::div);
        case expr::node_kind::sqrt: return sqrt_value(normalize(*e.operand()));
    }
    throw error("unreachable expression kind");
}

inline canonical_value normalize(const expr_ptr& e) { return normalize(*e); }

namespace detail {

// nonnegative rational as a tree whose printed form reparses to itself
inline expr_ptr rational_expr(const rational& q) {
    if (is_integer(q)) return expr::constant(q);
    return expr::div(expr::constant(rational(num(q))), expr::constant(rational(den(q))));
}

// coeff * sqrt^depth(radicand) for positive rational coeff
inline expr_ptr surd_term_expr(const rational& coeff, const integer& radicand,
                               unsigned depth) {
    if (depth == 0) return rational_expr(coeff);
    expr_ptr node = expr::constant(rational(radicand));
    for (unsigned i = 0; i < depth; ++i) node = expr::sqrt(node);
    if (num(coeff) != 1) node = expr::mul(expr::constant(rational(num(coeff))), node);
    if (den(coeff) != 1) node = expr::div(node, expr::constant(rational(den(coeff))));
    return node;
}

}  // namespace detail

// Expression form of a canonical value; normalize(to_expr(v)) == v, and the
// tree reparses to itself through the printer.
inline expr_ptr to_expr(const canonical_value& v) {
    if (is_zero(v)) return expr::constant(0);
    if (const auto* s = std::get_if<simple_surd>(&v)) {
        expr_ptr node = detail::surd_term_expr(s->coeff(), s->radicand(), s->depth());
        if (s->sign() < 0) node = expr::sub(expr::constant(0), node);
        return node;
    }
    // terms ordered by descending magnitude (exact: compare the squares), so
    // a binomial or apotome reads greater-term-first
    const auto& q = std::get<quad_element>(v);
    std::vector<std::pair<rational, const term_map::value_type*>> ordered;
    for (const auto& term : q.terms()) {
        integer d = 1;
        for (const integer& p : term.first) d *= p;
        ordered.emplace_back(term.second * term.second * rational(d), &term);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    expr_ptr node;
    for (const auto& [square, term] : ordered) {
        const auto& [mono, c] = *term;
        integer d = 1;
        for (const integer& p : mono) d *= p;
        expr_ptr part = detail::surd_term_expr(boost::multiprecision::abs(c), d,
                                               mono.empty() ? 0 : 1);
        if (!node)
            node = c < 0 ? expr::sub(expr::constant(0), part) : part;
        else
            node = c < 0 ? expr::sub(node, part) : expr::add(node, part);
    }
    return node;
}

}  // namespace surdx
