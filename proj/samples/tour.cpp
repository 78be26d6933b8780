// A short tour of the library: exact normalization, classification, root
// extraction and the X.115 ladder.

#include <iostream>

#include "surdx/surdx.hpp"

using namespace surdx;

static void show(const char* text) {
    canonical_value v = normalize(parse_expr(text));
    taxonomy_class tc = classify(v);
    std::cout << text << "\n  canonical: " << render_value(v)
              << "\n  approx:    " << to_decimal_string(v, 12) << "\n  class:     ";
    switch (tc.k) {
        case taxonomy_class::kind::rational_length: std::cout << "rational in length"; break;
        case taxonomy_class::kind::rational_power_only:
            std::cout << "rational in power only";
            break;
        case taxonomy_class::kind::simple_rank:
            std::cout << "simple surd of rank " << tc.rank << (tc.medial ? " (medial)" : "");
            break;
        case taxonomy_class::kind::binomial: std::cout << "binomial " << tc.species; break;
        case taxonomy_class::kind::apotome: std::cout << "apotome " << tc.species; break;
        case taxonomy_class::kind::unclassified: std::cout << "unclassified"; break;
    }
    std::cout << "\n\n";
}

int main() {
    show("5");
    show("sqrt(10)");
    show("sqrt(sqrt(2))");
    show("2 + sqrt(3)");
    show("sqrt(2) - 1");

    // the root of a first binomial is again a binomial
    binomial_pair first = make_binomial(1, 2);
    binomial_pair root = sqrt_first(first);
    std::cout << "sqrt(" << render_value(first.value()) << ") = " << render_value(root.value())
              << "\n";

    // the X.115 ladder: each term is incommensurable with the one before
    rank_sequence seq = x115_sequence(2, 4);
    for (unsigned i = 0; i < seq.terms.size(); ++i) {
        canonical_value u(seq.terms[i]);
        std::cout << "u_" << i + 1 << " = " << render_value(u) << "  rank " << rank(u) << "\n";
    }
    return 0;
}
