#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "surdx/verify.hpp"

namespace surdx {

// Exit codes: 0 success, 1 domain error, 2 usage or syntax error.
namespace cli_exit {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int usage = 2;
}  // namespace cli_exit

namespace detail {

using nlohmann::json;

inline const char* class_name(taxonomy_class::kind k) {
    switch (k) {
        case taxonomy_class::kind::rational_length: return "rational_length";
        case taxonomy_class::kind::rational_power_only: return "rational_power_only";
        case taxonomy_class::kind::simple_rank: return "simple_rank";
        case taxonomy_class::kind::binomial: return "binomial";
        case taxonomy_class::kind::apotome: return "apotome";
        case taxonomy_class::kind::unclassified: return "unclassified";
    }
    return "unclassified";
}

inline json classify_json(const std::string& input, const canonical_value& v) {
    taxonomy_class tc = classify(v);
    json j;
    j["input"] = input;
    j["canonical"] = render_value(v);
    j["class"] = class_name(tc.k);
    j["approx"] = to_decimal_string(v, 12);
    if (tc.k == taxonomy_class::kind::binomial || tc.k == taxonomy_class::kind::apotome) {
        j["species"] = tc.species;
        const auto& q = std::get<quad_element>(v);
        const auto& [m1, c1] = *q.terms().begin();
        const auto& [m2, c2] = *std::next(q.terms().begin());
        integer d1 = 1, d2 = 1;
        for (const integer& p : m1) d1 *= p;
        for (const integer& p : m2) d2 *= p;
        rational g = c1 * c1 * rational(d1), l = c2 * c2 * rational(d2);
        if (g < l) std::swap(g, l);
        j["conditions"] = {{"side_commensurable_with_greater", is_perfect_square((g - l) / g)},
                           {"greater_rational", is_perfect_square(g)},
                           {"lesser_rational", is_perfect_square(l)}};
    }
    if (tc.k == taxonomy_class::kind::rational_length ||
        tc.k == taxonomy_class::kind::rational_power_only ||
        tc.k == taxonomy_class::kind::simple_rank)
        j["rank"] = tc.rank;
    if (tc.k == taxonomy_class::kind::simple_rank) j["medial"] = tc.medial;
    return j;
}

inline void print_classify_text(const json& j, std::ostream& out) {
    out << "class: " << j["class"].get<std::string>();
    if (j.contains("species")) out << " (species " << j["species"].get<int>() << ")";
    if (j.contains("rank")) out << " (rank " << j["rank"].get<unsigned>() << ")";
    if (j.contains("medial") && j["medial"].get<bool>()) out << " [medial]";
    out << "\ncanonical: " << j["canonical"].get<std::string>();
    out << "\napprox: " << j["approx"].get<std::string>() << "\n";
}

inline json report_json(const verify_report& r) {
    json j;
    j["prop"] = r.prop;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["seed"] = r.seed;
    j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    return j;
}

}  // namespace detail

// Full command-line front end; streams are injected so tests can drive it.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact arithmetic and Book X classification of quadratic irrationals"};
    app.name("surdx");
    bool json_output = false;
    app.add_flag("--json", json_output, "emit JSON instead of text");
    app.require_subcommand(1);

    std::string expr_text, expr_text2, base_text = "2", n_text = "1", prop;
    bool power = false, apotome = false;
    unsigned count = 3;
    int species = 1;
    std::uint64_t trials = 100, seed = 0;

    CLI::App* c_classify = app.add_subcommand("classify", "classify an expression");
    c_classify->add_option("expr", expr_text, "expression to classify")->required();

    CLI::App* c_comm = app.add_subcommand("commensurable", "test commensurability");
    c_comm->add_option("expr1", expr_text, "first expression")->required();
    c_comm->add_option("expr2", expr_text2, "second expression")->required();
    c_comm->add_flag("--power", power, "compare in power instead of length");

    CLI::App* c_sqrt = app.add_subcommand("sqrt", "exact square root");
    c_sqrt->add_option("expr", expr_text, "expression to take the root of")->required();

    CLI::App* c_ranks = app.add_subcommand("ranks", "the X.115 ladder over a base");
    c_ranks->add_option("--base", base_text, "base segment (rational)")->required();
    c_ranks->add_option("--count", count, "number of terms")->required();

    CLI::App* c_binomial = app.add_subcommand("binomial", "binomial/apotome generators");
    CLI::App* c_gen = c_binomial->add_subcommand("gen", "generate a pair of a given species");
    c_gen->add_option("--type", species, "species 1..6")->required()->check(CLI::Range(1, 6));
    c_gen->add_option("--n", n_text, "generator parameter (rational)")->required();
    c_gen->add_flag("--apotome", apotome, "generate the apotome instead of the binomial");
    c_binomial->require_subcommand(1);

    CLI::App* c_verify = app.add_subcommand("verify", "seeded proposition checks");
    c_verify->add_option("--prop", prop, "proposition id")
        ->required()
        ->check(CLI::IsMember({"x17", "x21", "x54", "x115"}));
    c_verify->add_option("--trials", trials, "number of trials");
    c_verify->add_option("--seed", seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("surdx");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return cli_exit::ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return cli_exit::usage;
    }

    using detail::json;
    try {
        if (c_classify->parsed()) {
            canonical_value v = normalize(parse_expr(expr_text));
            json j = detail::classify_json(expr_text, v);
            if (json_output)
                out << j.dump() << "\n";
            else
                detail::print_classify_text(j, out);
        } else if (c_comm->parsed()) {
            canonical_value a = normalize(parse_expr(expr_text));
            canonical_value b = normalize(parse_expr(expr_text2));
            bool result = power ? commensurable_in_power(a, b) : commensurable_in_length(a, b);
            if (json_output) {
                json j;
                j["lhs"] = expr_text;
                j["rhs"] = expr_text2;
                j["mode"] = power ? "power" : "length";
                j["commensurable"] = result;
                out << j.dump() << "\n";
            } else {
                out << "commensurable in " << (power ? "power" : "length") << ": "
                    << (result ? "yes" : "no") << "\n";
            }
        } else if (c_sqrt->parsed()) {
            canonical_value v = normalize(parse_expr(expr_text));
            canonical_value r = sqrt_value(v);
            if (json_output) {
                json j;
                j["input"] = expr_text;
                j["canonical"] = render_value(v);
                j["result"] = render_value(r);
                j["approx"] = to_decimal_string(r, 12);
                out << j.dump() << "\n";
            } else {
                out << "sqrt: " << render_value(r) << "\napprox: " << to_decimal_string(r, 12)
                    << "\n";
            }
        } else if (c_ranks->parsed()) {
            rational base = parse_rational(base_text);
            rank_sequence seq = x115_sequence(base, count);
            if (json_output) {
                json j;
                j["base"] = to_string(base);
                j["count"] = count;
                j["terms"] = json::array();
                j["areas"] = json::array();
                for (unsigned i = 0; i < seq.terms.size(); ++i) {
                    canonical_value u(seq.terms[i]);
                    j["terms"].push_back({{"n", i + 1},
                                          {"value", render_value(u)},
                                          {"rank", rank(u)},
                                          {"approx", to_decimal_string(u, 12)}});
                    j["areas"].push_back({{"n", i + 1},
                                          {"value", render_value(seq.areas[i])},
                                          {"approx", to_decimal_string(seq.areas[i], 12)}});
                }
                out << j.dump() << "\n";
            } else {
                for (unsigned i = 0; i < seq.terms.size(); ++i) {
                    canonical_value u(seq.terms[i]);
                    out << "u_" << i + 1 << " = " << render_value(u)
                        << "  (rank " << rank(u) << ", approx " << to_decimal_string(u, 12)
                        << ")\n";
                }
                for (unsigned i = 0; i < seq.areas.size(); ++i)
                    out << "s_" << i + 1 << " = " << render_value(seq.areas[i]) << "\n";
            }
        } else if (c_binomial->parsed()) {
            rational n = parse_rational(n_text);
            binomial_pair p =
                apotome ? make_apotome(species, n) : make_binomial(species, n);
            canonical_value v = p.value();
            int k = classify_pair(p);
            if (json_output) {
                json j;
                j["kind"] = apotome ? "apotome" : "binomial";
                j["species"] = k;
                j["n"] = to_string(n);
                j["greater_square"] = to_string(p.greater().square);
                j["lesser_square"] = to_string(p.lesser().square);
                j["value"] = render_value(v);
                j["approx"] = to_decimal_string(v, 12);
                out << j.dump() << "\n";
            } else {
                out << (apotome ? "apotome" : "binomial") << " of species " << k << ": "
                    << render_value(v) << "\napprox: " << to_decimal_string(v, 12) << "\n";
            }
        } else if (c_verify->parsed()) {
            verify_report r = verify_proposition(prop, trials, seed);
            if (json_output)
                out << detail::report_json(r).dump() << "\n";
            else
                out << to_text(r);
            return r.passed == r.trials ? cli_exit::ok : cli_exit::domain;
        }
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return cli_exit::usage;
    } catch (const not_representable& e) {
        err << "not representable: " << e.what() << "\n";
        return cli_exit::domain;
    } catch (const error& e) {
        err << e.what() << "\n";
        return cli_exit::domain;
    }
    return cli_exit::ok;
}

}  // namespace surdx
