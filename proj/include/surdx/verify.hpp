#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "surdx/parser.hpp"
#include "surdx/ranks.hpp"
#include "surdx/taxonomy.hpp"

namespace surdx {

// Small deterministic generator; identical across platforms, so reports are
// byte-reproducible for a fixed seed.
struct split_mix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform draw in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }
};

// Trial i depends only on (seed, i), never on execution order.
inline split_mix64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    split_mix64 g{seed ^ (0x9E3779B97F4A7C15ull * (index + 1))};
    g.next();
    g.next();
    return g;
}

namespace gen {

inline rational random_rational(split_mix64& g, std::uint64_t max_num,
                                std::uint64_t max_den) {
    integer n(g.below(max_num) + 1);
    integer d(g.below(max_den) + 1);
    return make_rational(n, d);
}

inline rational random_nonsquare_rational(split_mix64& g, std::uint64_t max_num,
                                          std::uint64_t max_den) {
    for (;;) {
        rational q = random_rational(g, max_num, max_den);
        if (!is_perfect_square(q)) return q;
    }
}

// uniform-ish rational strictly between 0 and 1
inline rational random_proper_fraction(split_mix64& g) {
    std::uint64_t d = g.below(30) + 2;
    std::uint64_t n = g.below(d - 1) + 1;
    return make_rational(integer(n), integer(d));
}

struct x17_instance {
    rational a;
    rational bsq;
    bool side_commensurable;  // truth class fixed by construction
};

inline x17_instance make_x17_instance(split_mix64& g, bool commensurable) {
    for (;;) {
        rational a = random_rational(g, 40, 6) + 1;  // keep a comfortably above 1
        if (commensurable) {
            // pick a rational side c < a, then bsq = a^2 - c^2
            rational c = a * random_proper_fraction(g);
            return {a, a * a - c * c, true};
        }
        // pick bsq so the side a^2 - bsq is not a perfect square
        rational bsq = a * a * random_proper_fraction(g);
        if (is_perfect_square(a * a - bsq)) continue;
        return {a, bsq, false};
    }
}

struct medial_instance {
    rational s;
    rational t;
};

// squares of two power-only lines commensurable in square only
inline medial_instance make_medial_instance(split_mix64& g) {
    for (;;) {
        rational s = random_nonsquare_rational(g, 60, 8);
        rational t = random_nonsquare_rational(g, 60, 8);
        if (!is_perfect_square(s / t)) return {s, t};
    }
}

// A first binomial or apotome a +- sqrt(B): a rational and sqrt(a^2 - B)
// rational, with B itself not a perfect square.
inline binomial_pair make_first_pair(split_mix64& g, pair_sign sign) {
    for (;;) {
        rational a = random_rational(g, 30, 5) + 1;
        rational c = a * random_proper_fraction(g);
        rational b_sq = a * a - c * c;
        if (is_perfect_square(b_sq)) continue;
        return binomial_pair({a * a}, {b_sq}, sign);
    }
}

struct x115_instance {
    rational b;
    unsigned depth;
};

inline x115_instance make_x115_instance(split_mix64& g) {
    for (;;) {
        rational b = random_rational(g, 10, 3) + 1;
        if (is_perfect_square(b)) continue;
        return {b, static_cast<unsigned>(g.below(8)) + 1};
    }
}

}  // namespace gen

struct verify_report {
    std::string prop;
    std::uint64_t trials = 0;
    std::uint64_t passed = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> counterexample;  // first failing instance
};

namespace detail {

inline bool check_x17_trial(split_mix64& g, bool want_commensurable, std::string& instance) {
    gen::x17_instance inst = gen::make_x17_instance(g, want_commensurable);
    instance = "a=" + to_string(inst.a) + " bsq=" + to_string(inst.bsq);
    x17_result r = x17_split(inst.a, inst.bsq);
    return r.commensurable_parts == r.commensurable_side &&
           r.commensurable_side == inst.side_commensurable;
}

inline bool check_x21_trial(split_mix64& g, std::string& instance) {
    gen::medial_instance inst = gen::make_medial_instance(g);
    instance = "s=" + to_string(inst.s) + " t=" + to_string(inst.t);
    canonical_value rect = arith(sqrt_value(canonical(inst.s)),
                                 sqrt_value(canonical(inst.t)), arith_op::mul);
    return is_medial(sqrt_value(rect));
}

inline bool check_x54_trial(split_mix64& g, bool apotome, std::string& instance) {
    binomial_pair p = gen::make_first_pair(g, apotome ? pair_sign::minus : pair_sign::plus);
    instance = "greater_square=" + to_string(p.greater().square) +
               " lesser_square=" + to_string(p.lesser().square) +
               (apotome ? " sign=minus" : " sign=plus");
    if (classify_pair(p) != 1) return false;
    binomial_pair by_ii5 = sqrt_first_by_ii5(p);
    binomial_pair by_quadratic = sqrt_first_by_quadratic(p);
    if (!(by_ii5 == by_quadratic)) return false;
    binomial_pair root = sqrt_first(p);
    canonical_value rv = root.value();
    if (!(arith(rv, rv, arith_op::mul) == p.value())) return false;
    taxonomy_class tc = classify(rv);
    return tc.k == (apotome ? taxonomy_class::kind::apotome : taxonomy_class::kind::binomial);
}

inline bool check_x115_trial(split_mix64& g, std::string& instance) {
    gen::x115_instance inst = gen::make_x115_instance(g);
    instance = "b=" + to_string(inst.b) + " depth=" + std::to_string(inst.depth);
    rank_sequence seq = x115_sequence(inst.b, inst.depth);
    canonical_value unit = canonical(1);
    canonical_value b_val = canonical(inst.b);
    canonical_value prev = unit;
    for (unsigned i = 0; i < seq.terms.size(); ++i) {
        canonical_value u(seq.terms[i]);
        if (!(pow2k(u, 1) == arith(b_val, prev, arith_op::mul))) return false;
        if (!(seq.areas[i] == arith(b_val, u, arith_op::mul))) return false;
        if (rank(u) != i + 1) return false;
        if (commensurable_in_length(u, prev)) return false;
        if (commensurable_in_length(u, unit)) return false;
        prev = u;
    }
    return s_recurrence_check(inst.b, inst.depth);
}

}  // namespace detail

// Seeded property run for the four propositions the library realizes.
inline verify_report verify_proposition(std::string_view prop, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw domain_error("verify requires at least one trial");
    if (prop != "x17" && prop != "x21" && prop != "x54" && prop != "x115")
        throw domain_error("unknown proposition id: " + std::string(prop));

    verify_report report;
    report.prop = std::string(prop);
    report.trials = trials;
    report.seed = seed;
    for (std::uint64_t i = 0; i < trials; ++i) {
        split_mix64 g = trial_rng(seed, i);
        std::string instance;
        bool ok = false;
        try {
            if (prop == "x17")
                ok = detail::check_x17_trial(g, i % 2 == 0, instance);
            else if (prop == "x21")
                ok = detail::check_x21_trial(g, instance);
            else if (prop == "x54")
                ok = detail::check_x54_trial(g, i % 2 == 1, instance);
            else
                ok = detail::check_x115_trial(g, instance);
        } catch (const error& e) {
            ok = false;
            instance += std::string(instance.empty() ? "" : " ") + "error: " + e.what();
        }
        if (ok)
            ++report.passed;
        else if (!report.counterexample)
            report.counterexample = "trial " + std::to_string(i) + ": " + instance;
    }
    return report;
}

inline std::string to_text(const verify_report& r) {
    std::string out;
    out += "proposition: " + r.prop + "\n";
    out += "trials: " + std::to_string(r.trials) + "\n";
    out += "passed: " + std::to_string(r.passed) + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "counterexample: " + (r.counterexample ? *r.counterexample : "none") + "\n";
    return out;
}

}  // namespace surdx
