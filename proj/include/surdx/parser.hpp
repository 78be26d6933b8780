#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "surdx/expr.hpp"

namespace surdx {

namespace detail {

// Recursive descent over
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := NUMBER | "(" expr ")" | "sqrt" "(" expr ")"
//   NUMBER := digits ["." digits]
struct expr_parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) {
            skip_ws();
            throw parse_error(pos, std::string("'") + c + "'");
        }
    }

    // decimal digits only; cpp_int's own string constructor would read a
    // leading zero as octal
    static integer digits_value(std::string_view digits) {
        integer v = 0;
        for (char c : digits) v = v * 10 + (c - '0');
        return v;
    }

    rational parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error(pos, "a number, '(' or 'sqrt'");
        integer int_part = digits_value(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::size_t fstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == fstart) throw parse_error(pos, "a digit after '.'");
            integer frac = digits_value(text.substr(fstart, pos - fstart));
            integer scale = pow10(static_cast<unsigned>(pos - fstart));
            return make_rational(int_part * scale + frac, scale);
        }
        return rational(int_part);
    }

    expr_ptr parse_factor() {
        skip_ws();
        if (pos >= text.size()) throw parse_error(pos, "a number, '(' or 'sqrt'");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            expr_ptr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (text.substr(start, pos - start) != "sqrt")
                throw parse_error(start, "'sqrt'");
            expect('(');
            expr_ptr inner = parse_sum();
            expect(')');
            return expr::sqrt(std::move(inner));
        }
        return expr::constant(parse_number());
    }

    expr_ptr parse_term() {
        expr_ptr node = parse_factor();
        for (;;) {
            if (eat('*'))
                node = expr::mul(std::move(node), parse_factor());
            else if (eat('/'))
                node = expr::div(std::move(node), parse_factor());
            else
                return node;
        }
    }

    expr_ptr parse_sum() {
        expr_ptr node = parse_term();
        for (;;) {
            if (eat('+'))
                node = expr::add(std::move(node), parse_term());
            else if (eat('-'))
                node = expr::sub(std::move(node), parse_term());
            else
                return node;
        }
    }
};

inline int precedence(expr::node_kind k) {
    switch (k) {
        case expr::node_kind::add:
        case expr::node_kind::sub: return 1;
        case expr::node_kind::mul:
        case expr::node_kind::div: return 2;
        default: return 3;
    }
}

// Constants print as integers or terminating decimals when the denominator is
// of the form 2^a*5^b, so parsed trees survive a print/parse roundtrip.
inline std::string constant_string(const rational& q) {
    if (is_integer(q)) return num(q).str();
    integer d = den(q);
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return to_string(q);  // only reachable for programmatic trees
    unsigned shift = std::max(twos, fives);
    integer scaled = num(q) * pow10(shift) / den(q);
    std::string sign = scaled < 0 ? "-" : "";
    std::string digits = integer(boost::multiprecision::abs(scaled)).str();
    if (digits.size() <= shift) digits.insert(0, shift + 1 - digits.size(), '0');
    digits.insert(digits.size() - shift, ".");
    return sign + digits;
}

inline void print_node(const expr& e, int parent_prec, bool right_side, std::string& out) {
    int prec = precedence(e.kind());
    bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    switch (e.kind()) {
        case expr::node_kind::constant: out += constant_string(e.constant_value()); return;
        case expr::node_kind::sqrt:
            out += "sqrt(";
            print_node(*e.operand(), 0, false, out);
            out += ")";
            return;
        default: break;
    }
    const char* op = e.kind() == expr::node_kind::add   ? " + "
                     : e.kind() == expr::node_kind::sub ? " - "
                     : e.kind() == expr::node_kind::mul ? " * "
                                                        : " / ";
    if (parens) out += "(";
    print_node(*e.lhs(), prec, false, out);
    out += op;
    print_node(*e.rhs(), prec, true, out);
    if (parens) out += ")";
}

}  // namespace detail

inline expr_ptr parse_expr(std::string_view text) {
    detail::expr_parser p{text};
    expr_ptr e = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error(p.pos, "end of input");
    return e;
}

inline std::string print_expr(const expr& e) {
    std::string out;
    detail::print_node(e, 0, false, out);
    return out;
}

inline std::string print_expr(const expr_ptr& e) { return print_expr(*e); }

// Canonical value rendered as a parseable expression string.
inline std::string render_value(const canonical_value& v) { return print_expr(to_expr(v)); }

// Rational CLI argument: an integer, decimal, or fraction like "3/2"
// (any constant expression that evaluates to a rational is accepted).
inline rational parse_rational(std::string_view text) {
    canonical_value v = normalize(parse_expr(text));
    if (!is_rational_value(v)) throw domain_error("expected a rational number");
    return as_rational(v);
}

}  // namespace surdx
