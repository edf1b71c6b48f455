#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "synmon/closure.hpp"
#include "synmon/decompose.hpp"
#include "synmon/dfa.hpp"
#include "synmon/display.hpp"
#include "synmon/dot.hpp"
#include "synmon/downset.hpp"
#include "synmon/epset.hpp"
#include "synmon/ineq.hpp"
#include "synmon/json_io.hpp"
#include "synmon/lang_ops.hpp"
#include "synmon/numsemigroup.hpp"
#include "synmon/reproduce.hpp"
#include "synmon/syntactic.hpp"

namespace synmon::cli {

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Parses "a:bc,b:" into a morphism from the keys' alphabet.
inline Morphism parse_map(const std::string& text, const Alphabet& target) {
    std::string source_symbols;
    std::vector<std::string> images;
    for (const std::string& entry : split(text, ',')) {
        auto pos = entry.find(':');
        if (pos == std::string::npos || pos != 1)
            throw error("map entries must look like letter:word, got '" + entry + "'");
        source_symbols += entry[0];
        images.push_back(entry.substr(2));
    }
    return make_morphism(Alphabet(source_symbols), target, std::move(images));
}

inline void print_monoid_text(std::ostream& out, const OrderedMonoid& m) {
    out << "elements: " << m.n << "\n";
    out << "identity: " << m.identity << "\n";
    out << "names:";
    for (int x = 0; x < m.n; ++x)
        out << " " << m.name_of(x);
    out << "\nmult:\n";
    for (int x = 0; x < m.n; ++x) {
        out << " ";
        for (int y = 0; y < m.n; ++y)
            out << " " << m.mul(x, y);
        out << "\n";
    }
    out << "strict order:";
    auto pairs = strict_pairs(m);
    if (pairs.empty())
        out << " (equality)";
    for (auto [x, y] : pairs)
        out << " " << m.name_of(x) << "<" << m.name_of(y);
    out << "\n";
    auto props = monoid_props(m);
    out << "commutative: " << (props.commutative ? "yes" : "no")
        << ", aperiodic: " << (props.aperiodic ? "yes" : "no") << "\nidempotents:";
    for (int e : props.idempotents)
        out << " " << m.name_of(e);
    out << "\n";
}

struct MonoidInput {
    std::string monoid_file;
    std::string alphabet;
    std::string regex;

    void attach(CLI::App* cmd) {
        cmd->add_option("--monoid", monoid_file, "ordered monoid JSON file");
        cmd->add_option("--alphabet", alphabet, "alphabet for --regex");
        cmd->add_option("--regex", regex, "build the syntactic monoid of this language");
    }

    /// The monoid plus, when built from a regex, its syntactic stamp.
    std::pair<OrderedMonoid, std::optional<Stamp>> load() const {
        if (!monoid_file.empty()) {
            std::ifstream in(monoid_file);
            if (!in)
                throw error("cannot open " + monoid_file);
            nlohmann::json j;
            in >> j;
            return {monoid_from_json(j), std::nullopt};
        }
        if (regex.empty())
            throw error("either --monoid or --alphabet/--regex is required");
        SyntacticData syn = transition_monoid(compile(regex, Alphabet(alphabet)));
        return {syn.monoid, syn.stamp};
    }
};

} // namespace detail

/// Runs the command line given in `args` (without the program name).
/// Exit codes: 0 success, 1 computation error, 2 usage error, 3 reproduce
/// failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"syntactic ordered monoids, downset monoids and inequality checks "
                 "for regular languages"};
    app.require_subcommand(1);

    // --- syn / order ---
    detail::MonoidInput syn_in;
    bool syn_json = false, syn_dot = false;
    auto* syn = app.add_subcommand("syn", "syntactic ordered monoid of a language");
    syn_in.attach(syn);
    syn->add_flag("--json", syn_json, "emit the monoid as JSON");
    syn->add_flag("--dot", syn_dot, "emit the Hasse diagram as DOT");

    detail::MonoidInput order_in;
    bool order_dot = false;
    auto* order = app.add_subcommand("order", "syntactic order of a language");
    order_in.attach(order);
    order->add_flag("--dot", order_dot, "emit the Hasse diagram as DOT");

    // --- downset ---
    detail::MonoidInput down_in;
    bool down_empty = false, down_json = false, down_qcheck = false, down_u1 = false;
    auto* down = app.add_subcommand("downset", "downset monoid of an ordered monoid");
    down_in.attach(down);
    down->add_flag("--empty", down_empty, "include the empty downset as a zero");
    down->add_flag("--json", down_json, "emit the result as JSON");
    down->add_flag("--quotient-check", down_qcheck,
                   "verify the quotient map P(M) x U1 -> P0(M)");
    down->add_flag("--u1", down_u1, "print the two-element monoid U1 instead");

    // --- check ---
    detail::MonoidInput check_in;
    std::vector<std::string> check_ineqs;
    std::string check_mode = "monoid";
    auto* check = app.add_subcommand("check", "inequality satisfaction in an ordered monoid");
    check_in.attach(check);
    check->add_option("--ineq", check_ineqs, "inequality, e.g. \"x^2 <= x^3\" or \"x^w = x^(w+1)\"")
        ->required();
    check->add_option("--mode", check_mode, "monoid, lp or ld")
        ->check(CLI::IsMember({"monoid", "lp", "ld"}));

    // --- closure ---
    std::string clo_alphabet;
    std::vector<std::string> clo_regexes;
    std::string clo_ops = "union,intersect,left_quotient,right_quotient";
    long clo_expect = -1;
    bool clo_list = false;
    auto* clo = app.add_subcommand("closure", "lattice closure of a language family");
    clo->add_option("--alphabet", clo_alphabet, "alphabet")->required();
    clo->add_option("--regex", clo_regexes, "generator language (repeatable)")->required();
    clo->add_option("--ops", clo_ops, "comma list of union,intersect,complement,left_quotient,right_quotient");
    clo->add_option("--expect-count", clo_expect, "exit nonzero unless the family has this size");
    clo->add_flag("--list", clo_list, "list the members as regexes");

    // --- shuffle ---
    std::string sh_a1, sh_r1, sh_a2, sh_r2;
    bool sh_json = false, sh_dot = false;
    auto* sh = app.add_subcommand("shuffle", "shuffle product of two languages");
    sh->add_option("--alphabet1", sh_a1, "alphabet of the first language")->required();
    sh->add_option("--regex1", sh_r1, "first language")->required();
    sh->add_option("--alphabet2", sh_a2, "alphabet of the second language")->required();
    sh->add_option("--regex2", sh_r2, "second language")->required();
    sh->add_flag("--json", sh_json, "emit the automaton as JSON");
    sh->add_flag("--dot", sh_dot, "emit the automaton as DOT");

    // --- rename ---
    std::string rn_alphabet, rn_regex, rn_map;
    bool rn_json = false;
    auto* rn = app.add_subcommand("rename", "image under a length-preserving morphism");
    rn->add_option("--alphabet", rn_alphabet, "alphabet of the language")->required();
    rn->add_option("--regex", rn_regex, "language")->required();
    rn->add_option("--map", rn_map, "letter images, e.g. a:b,b:b")->required();
    rn->add_flag("--json", rn_json, "emit the automaton as JSON");

    // --- invhom ---
    std::string ih_alphabet, ih_regex, ih_map;
    bool ih_json = false;
    auto* ih = app.add_subcommand("invhom", "preimage under a morphism");
    ih->add_option("--alphabet", ih_alphabet, "alphabet of the language")->required();
    ih->add_option("--regex", ih_regex, "language")->required();
    ih->add_option("--map", ih_map, "images of the preimage alphabet, e.g. a:bc,b:")->required();
    ih->add_flag("--json", ih_json, "emit the automaton as JSON");

    // --- decompose ---
    std::string dc_alphabet, dc_regex;
    auto* dc = app.add_subcommand("decompose", "commutative shuffle decomposition");
    dc->add_option("--alphabet", dc_alphabet, "alphabet")->required();
    dc->add_option("--regex", dc_regex, "commutative language")->required();

    // --- numsg ---
    std::string ns_gens;
    long ns_ineq_bound = 0;
    auto* ns = app.add_subcommand("numsg", "numerical semigroup of a generating set");
    ns->add_option("--gens", ns_gens, "comma list of generators, e.g. 3,5")->required();
    ns->add_option("--check-ineq", ns_ineq_bound,
                   "verify x <= x^(m+1) against membership for m up to this bound");

    // --- reproduce ---
    auto* rep = app.add_subcommand("reproduce", "run the built-in corpus of worked examples");

    try {
        std::vector<const char*> argv;
        argv.push_back("synmon");
        for (const auto& s : args)
            argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (syn->parsed()) {
            auto [m, stamp] = syn_in.load();
            if (syn_json)
                out << to_json(m).dump(2) << "\n";
            else if (syn_dot)
                out << hasse_dot(m);
            else
                detail::print_monoid_text(out, m);
            return 0;
        }
        if (order->parsed()) {
            auto [m, stamp] = order_in.load();
            if (order_dot) {
                out << hasse_dot(m);
                return 0;
            }
            out << "strict pairs:";
            auto pairs = strict_pairs(m);
            if (pairs.empty())
                out << " (equality)";
            for (auto [x, y] : pairs)
                out << " " << m.name_of(x) << "<" << m.name_of(y);
            out << "\ncovers:";
            for (auto [x, y] : covering_pairs(m))
                out << " " << m.name_of(x) << "<" << m.name_of(y);
            out << "\n";
            return 0;
        }
        if (down->parsed()) {
            if (down_u1) {
                OrderedMonoid u = u1_down();
                if (down_json)
                    out << to_json(u).dump(2) << "\n";
                else
                    detail::print_monoid_text(out, u);
                return 0;
            }
            auto [m, stamp] = down_in.load();
            if (down_qcheck) {
                out << (quotient_check(m) ? "quotient check: passed" : "quotient check: FAILED")
                    << "\n";
                return 0;
            }
            OrderedMonoid dm = downset_monoid(m, down_empty);
            if (down_json)
                out << to_json(dm).dump(2) << "\n";
            else
                detail::print_monoid_text(out, dm);
            return 0;
        }
        if (check->parsed()) {
            auto [m, stamp] = check_in.load();
            SatMode mode = check_mode == "monoid" ? SatMode::Monoid
                         : check_mode == "lp"     ? SatMode::Lp
                                                  : SatMode::Ld;
            if (mode != SatMode::Monoid && !stamp)
                throw error("lp and ld modes need a stamp; use --alphabet/--regex input");
            for (const std::string& text : check_ineqs) {
                Inequality ineq = parse_inequality(text);
                auto witness = mode == SatMode::Monoid ? find_violation(m, ineq)
                                                       : stamp_find_violation(*stamp, ineq, mode);
                out << text << ": " << (witness ? "false" : "true");
                if (witness) {
                    out << "  (";
                    bool first = true;
                    for (auto [v, x] : *witness) {
                        out << (first ? "" : ", ") << v << " = " << m.name_of(x);
                        first = false;
                    }
                    out << ")";
                }
                out << "\n";
            }
            return 0;
        }
        if (clo->parsed()) {
            Alphabet alphabet(clo_alphabet);
            std::vector<Dfa> gens;
            for (const std::string& r : clo_regexes)
                gens.push_back(compile(r, alphabet));
            std::set<ClosureOp> ops;
            for (const std::string& name : detail::split(clo_ops, ',')) {
                if (name == "union")
                    ops.insert(ClosureOp::Union);
                else if (name == "intersect")
                    ops.insert(ClosureOp::Intersect);
                else if (name == "complement")
                    ops.insert(ClosureOp::Complement);
                else if (name == "left_quotient")
                    ops.insert(ClosureOp::LeftQuotient);
                else if (name == "right_quotient")
                    ops.insert(ClosureOp::RightQuotient);
                else
                    throw error("unknown closure op '" + name + "'");
            }
            ClosureFamily family = lattice_closure(gens, ops);
            out << "members: " << family.members.size() << "\n";
            if (clo_list) {
                std::vector<std::string> texts;
                for (const auto& m : family.members)
                    texts.push_back(display_regex(m));
                std::sort(texts.begin(), texts.end(), [](const auto& x, const auto& y) {
                    return x.size() != y.size() ? x.size() < y.size() : x < y;
                });
                for (const auto& t : texts)
                    out << t << "\n";
            }
            if (clo_expect >= 0 && family.members.size() != static_cast<std::size_t>(clo_expect)) {
                err << "expected " << clo_expect << " members, computed " << family.members.size()
                    << "\n";
                return 1;
            }
            return 0;
        }
        auto emit_language = [&](const Dfa& d, bool as_json, bool as_dot) {
            if (as_dot)
                out << to_dot(d);
            else if (as_json)
                out << to_json(d).dump(2) << "\n";
            else
                out << display_regex(d) << "\n";
        };
        if (sh->parsed()) {
            Dfa result = shuffle(compile(sh_r1, Alphabet(sh_a1)), compile(sh_r2, Alphabet(sh_a2)));
            emit_language(result, sh_json, sh_dot);
            return 0;
        }
        if (rn->parsed()) {
            Alphabet alphabet(rn_alphabet);
            // The target alphabet is inferred from the image letters.
            std::string targets;
            for (const std::string& entry : detail::split(rn_map, ',')) {
                auto pos = entry.find(':');
                if (pos == std::string::npos)
                    continue; // parse_map reports the malformed entry
                for (std::size_t i = pos + 1; i < entry.size(); ++i)
                    if (targets.find(entry[i]) == std::string::npos)
                        targets += entry[i];
            }
            Morphism phi = detail::parse_map(rn_map, Alphabet(targets));
            if (phi.source != alphabet)
                throw error("--map must cover exactly the letters of --alphabet");
            emit_language(rename_image(compile(rn_regex, alphabet), phi), rn_json, false);
            return 0;
        }
        if (ih->parsed()) {
            Alphabet alphabet(ih_alphabet);
            Morphism phi = detail::parse_map(ih_map, alphabet);
            emit_language(inverse_morphism(compile(ih_regex, alphabet), phi), ih_json, false);
            return 0;
        }
        if (dc->parsed()) {
            Alphabet alphabet(dc_alphabet);
            Decomposition dec = decompose_commutative(compile(dc_regex, alphabet));
            out << "terms: " << dec.terms.size() << "\n";
            for (std::size_t i = 0; i < dec.terms.size(); ++i) {
                out << "term " << i + 1 << ":";
                for (const auto& [letter, eps] : dec.terms[i].components)
                    out << "  " << letter << ": " << display_epset(eps, letter);
                out << "\n";
            }
            return 0;
        }
        if (ns->parsed()) {
            std::vector<std::int64_t> gens;
            for (const std::string& g : detail::split(ns_gens, ','))
                if (!g.empty())
                    gens.push_back(std::stoll(g));
            NumericalSemigroup nsg = nsg_generate(gens);
            out << "minimal generators:";
            for (auto g : nsg.minimal_generators)
                out << " " << g;
            out << "\nconductor: ";
            if (nsg.conductor)
                out << *nsg.conductor;
            else
                out << "none (gcd " << nsg.period << ")";
            out << "\nmembers up to 20:";
            for (std::int64_t n = 0; n <= 20; ++n)
                if (nsg.member(n))
                    out << " " << n;
            out << "\nlanguage: " << display_regex(build_ls(gens)) << "\n";
            if (ns_ineq_bound > 0) {
                for (auto [m, holds] : vs_characterization(gens, ns_ineq_bound))
                    out << "m=" << m << ": x <= x^" << (m + 1) << " is "
                        << (holds ? "satisfied" : "not satisfied") << ", m in <S>: "
                        << (nsg.member(m) ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (rep->parsed()) {
            reproduce::Report report = reproduce::run_all(out);
            return report.failed == 0 ? 0 : 3;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace synmon::cli
