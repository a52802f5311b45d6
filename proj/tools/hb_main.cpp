// Command-line front end: invariant evaluation, trace series, and the
// verification suites, with exact-rational JSON output.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hb/braid.hpp"
#include "hb/error.hpp"
#include "hb/eyb.hpp"
#include "hb/invariants.hpp"
#include "hb/report.hpp"
#include "hb/singular.hpp"
#include "hb/trace.hpp"
#include "hb/wordio.hpp"

namespace {

const hb::EYBOperator& pick_operator(const std::string& path, hb::EYBOperator& storage) {
    if (path.empty()) return hb::builtin_operator();
    storage = hb::load_operator_file(path);
    return storage;
}

int print_report(const hb::Report& rep) {
    int shown = 0;
    for (const auto& it : rep.items) {
        const char* mark = it.informational ? (it.pass ? "info" : "INFO") : (it.pass ? "pass" : "FAIL");
        std::cout << mark << "  " << it.name;
        if (!it.detail.empty()) std::cout << "  (" << it.detail << ")";
        std::cout << "\n";
        ++shown;
    }
    const int bad = rep.failures();
    std::cout << rep.suite << ": " << (shown - bad) << "/" << shown << " items";
    if (bad) std::cout << ", " << bad << " FAILED";
    std::cout << "\n";
    return bad == 0 ? 0 : 4;
}

bool has_bands(const hb::SingularWord& w) {
    for (const auto& l : w.letters)
        if (l.kind == hb::SGen::A) return true;
    return false;
}

hb::BraidWord to_braid(const hb::SingularWord& w) {
    hb::BraidWord out{w.genus, w.strands, {}};
    for (const auto& l : w.letters)
        out.letters.push_back(l.kind == hb::SGen::Sigma ? hb::sigma(l.index, l.exp)
                                                        : hb::tau(l.index, l.exp));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-type link invariants in handlebodies via braid closures"};
    app.require_subcommand(1);

    std::string word_text, operator_path, suite;
    int genus = 0, strands = 2, killed = 0, degree = 0, order = 8;
    std::optional<int> opt_genus, opt_strands, opt_depth;
    std::uint32_t seed = 1u;
    bool as_json = false;

    CLI::App* inv = app.add_subcommand("invariant", "evaluate a degree-d invariant of a braid closure");
    inv->add_option("--genus", genus, "handlebody genus g (default 0)");
    inv->add_option("--strands", strands, "number of moving strands n")->required();
    inv->add_option("--word", word_text, "braid word, e.g. \"s1 s1 s1\" or \"t1 s2^-1\"")->required();
    inv->add_option("--i", killed, "handles excluded from the invariant family index (0..g)");
    inv->add_option("--d", degree, "invariant degree d (default 0)");
    inv->add_option("--order", order, "series truncation order (default max(8, d))");
    inv->add_flag("--json", as_json, "emit a JSON record instead of a table");
    inv->add_option("--operator", operator_path, "operator definition file (default: built-in)");

    CLI::App* trc = app.add_subcommand("trace", "print the trace series of a braid or singular word");
    trc->add_option("--genus", genus, "handlebody genus g (default 0)");
    trc->add_option("--strands", strands, "number of moving strands n")->required();
    trc->add_option("--word", word_text, "word; double points a<i> allowed")->required();
    trc->add_option("--i", killed, "handles excluded from the family index (0..g)");
    trc->add_option("--order", order, "series truncation order (default 8)");
    trc->add_flag("--json", as_json, "emit a JSON record instead of a table");
    trc->add_option("--operator", operator_path, "operator definition file (default: built-in)");

    CLI::App* chk = app.add_subcommand("check", "run a verification suite");
    chk->add_option("--suite", suite, "relations1|relations2|prop1|markov|eyb|vanishing")
        ->required()
        ->check(CLI::IsMember({"relations1", "relations2", "prop1", "markov", "eyb", "vanishing"}));
    chk->add_option("--genus", opt_genus, "genus bound (suite-specific default)");
    chk->add_option("--strands", opt_strands, "strand bound (suite-specific default)");
    chk->add_option("--depth", opt_depth, "suite size knob: rewrite depth / words per case / band bound");
    chk->add_option("--seed", seed, "random seed for sampled suites");
    chk->add_option("--operator", operator_path, "operator definition file (default: built-in)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        hb::EYBOperator storage;
        // The axioms suite judges a candidate operator itself, so its load
        // skips the up-front axioms gate every other path applies.
        const bool judge_axioms = chk->parsed() && suite == "eyb";
        const hb::EYBOperator& op = judge_axioms && !operator_path.empty()
                                        ? (storage = hb::load_operator_file(operator_path, false))
                                        : pick_operator(operator_path, storage);

        if (inv->parsed()) {
            const hb::BraidWord w = hb::parse_braid_word(word_text, genus, strands);
            const int eff_order = std::max(order, degree);
            const hb::InvariantResult res = hb::link_invariant(w, killed, degree, op, eff_order);
            hb::RecordInput rec;
            rec.word = hb::word_str(w);
            rec.genus = genus;
            rec.strands = strands;
            rec.killed = killed;
            rec.degree = degree;
            rec.order = eff_order;
            rec.value = res.value;
            rec.series = res.series;
            rec.writhe = res.writhe_value;
            rec.components = res.components;
            rec.operator_id = res.operator_id;
            std::cout << (as_json ? hb::record_json(rec) : hb::record_table(rec)) << "\n";
            return 0;
        }

        if (trc->parsed()) {
            const hb::SingularWord w = hb::parse_singular_word(word_text, genus, strands);
            hb::RecordInput rec;
            rec.word = hb::singular_word_str(w);
            rec.genus = genus;
            rec.strands = strands;
            rec.killed = killed;
            rec.order = order;
            rec.series = has_bands(w) ? hb::singular_trace_series(w, killed, op, order)
                                      : hb::word_trace_series(to_braid(w), killed, op, order);
            rec.writhe = hb::singular_writhe(w);
            rec.components = hb::singular_closure_components(w);
            rec.operator_id = op.convention_id();
            std::cout << (as_json ? hb::record_json(rec) : hb::record_table(rec)) << "\n";
            return 0;
        }

        // check
        hb::Report rep;
        if (suite == "relations1") {
            rep = hb::relation_suite_singular(opt_strands.value_or(4));
        } else if (suite == "relations2") {
            rep = hb::relation_suite_braid(opt_genus.value_or(3), opt_strands.value_or(4));
        } else if (suite == "prop1") {
            const int g = opt_genus.value_or(3);
            const int n = opt_strands.value_or(2);
            rep = hb::Report("prop1");
            for (int i = 1; i <= g; ++i) {
                hb::Report one = hb::interval_band_conjugation_check(g, n, i, opt_depth.value_or(8));
                for (auto& item : one.items) rep.items.push_back(std::move(item));
            }
        } else if (suite == "markov") {
            rep = hb::markov_trace_suite(op, opt_depth.value_or(6), seed);
        } else if (suite == "eyb") {
            rep = hb::eyb_axioms_check(op);
        } else { // vanishing
            rep = hb::vanishing_suite(op, opt_genus.value_or(2), opt_strands.value_or(3),
                                      opt_depth.value_or(4), 3, 6, seed);
        }
        return print_report(rep);
    } catch (const hb::ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const hb::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
