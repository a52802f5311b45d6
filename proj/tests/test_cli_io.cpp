#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hb/error.hpp"
#include "hb/eyb.hpp"
#include "hb/invariants.hpp"
#include "hb/trace.hpp"
#include "hb/wordio.hpp"

using namespace hb;

namespace {

// Run a shell command; capture stdout+stderr and the exit status.
struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    RunResult r;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

const std::string kCli = HB_CLI_PATH;

} // namespace

TEST_CASE("braid parsing: plain tokens and exponents") {
    const BraidWord w = parse_braid_word("s1 s1 s1", 0, 2);
    CHECK(w.letters.size() == 3);
    CHECK(word_str(w) == "s1 s1 s1");

    const BraidWord p = parse_braid_word("s1^3 s2^-2", 0, 3);
    CHECK(p.letters.size() == 5);
    CHECK(word_str(p) == "s1 s1 s1 s2^-1 s2^-1");

    const BraidWord z = parse_braid_word("s1^0", 0, 2);
    CHECK(z.letters.empty());
    CHECK(word_str(z) == "e");

    const BraidWord t = parse_braid_word("t2 s1^-1", 2, 2);
    CHECK(t.letters.size() == 2);
    CHECK(t.letters[0].kind == Gen::Tau);
}

TEST_CASE("the empty word parses from both spellings") {
    CHECK(parse_braid_word("e", 1, 3).letters.empty());
    CHECK(parse_braid_word("", 1, 3).letters.empty());
    CHECK(parse_singular_word("e", 0, 2).letters.empty());
}

TEST_CASE("singular parsing admits bands without inverses") {
    const SingularWord w = parse_singular_word("t1 s1^-1 a2", 1, 3);
    CHECK(w.letters.size() == 3);
    CHECK(w.letters[2].kind == SGen::A);

    const SingularWord d = parse_singular_word("a1^2", 0, 2);
    CHECK(d.letters.size() == 2);

    CHECK_THROWS_AS(parse_singular_word("a1^-1", 0, 2), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("a1", 0, 2), ValidationError);
}

TEST_CASE("out-of-range indices are rejected with positions") {
    CHECK_THROWS_AS(parse_braid_word("s5", 0, 3), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("t1", 0, 3), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("s0", 0, 3), ValidationError);
    try {
        parse_braid_word("s1 s5", 0, 3);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("token 2") != std::string::npos);
    }
}

TEST_CASE("malformed tokens are rejected") {
    CHECK_THROWS_AS(parse_braid_word("x1", 0, 2), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("s", 0, 2), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("s1^", 0, 2), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("s1^two", 0, 2), ValidationError);
    CHECK_THROWS_AS(parse_braid_word("s1x", 0, 2), ValidationError);
}

TEST_CASE("printing then parsing is the identity on parsed words") {
    std::mt19937 rng(2026);
    for (int t = 0; t < 1000; ++t) {
        const int genus = static_cast<int>(rng() % 3);
        const int strands = 2 + static_cast<int>(rng() % 3);
        const bool singular = (t % 2) == 1;
        // build a random word text with exponents, then round-trip it
        std::ostringstream text;
        const int len = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            if (i) text << ' ';
            const int pick = static_cast<int>(rng() % (singular ? 3u : 2u));
            if (pick == 0) {
                text << 's' << 1 + rng() % (strands - 1);
                if (rng() % 2) text << '^' << (rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 3);
            } else if (pick == 1 && genus > 0) {
                text << 't' << 1 + rng() % genus;
                if (rng() % 2) text << '^' << (rng() % 2 ? 1 : -1) * static_cast<int>(1 + rng() % 2);
            } else if (pick == 1) {
                text << 's' << 1 + rng() % (strands - 1);
            } else {
                text << 'a' << 1 + rng() % (strands - 1);
                if (rng() % 2) text << '^' << 1 + rng() % 2;
            }
        }
        if (singular) {
            const SingularWord w = parse_singular_word(text.str(), genus, strands);
            const SingularWord back = parse_singular_word(singular_word_str(w), genus, strands);
            REQUIRE(singular_word_str(back) == singular_word_str(w));
            REQUIRE(back.letters.size() == w.letters.size());
        } else {
            const BraidWord w = parse_braid_word(text.str(), genus, strands);
            const BraidWord back = parse_braid_word(word_str(w), genus, strands);
            REQUIRE(word_str(back) == word_str(w));
            REQUIRE(back.letters.size() == w.letters.size());
        }
    }
}

TEST_CASE("singular writhe counts crossings only") {
    const SingularWord w = parse_singular_word("s1 s1 a1 t1^-1", 1, 2);
    CHECK(singular_writhe(w) == 0); // 2 from s1 s1, -2 from t1^-1, a1 free
    CHECK(singular_writhe(parse_singular_word("a1 a1", 0, 2)) == 0);
}

TEST_CASE("closure component count includes handle cores") {
    CHECK(singular_closure_components(parse_singular_word("s1", 0, 2)) == 1);
    CHECK(singular_closure_components(parse_singular_word("a1", 0, 2)) == 1);
    CHECK(singular_closure_components(parse_singular_word("e", 0, 2)) == 2);
    CHECK(singular_closure_components(parse_singular_word("t1", 1, 2)) == 3);
}

TEST_CASE("json records are exact, versioned, and complete") {
    RecordInput r;
    r.word = "s1 s1 s1";
    r.genus = 0;
    r.strands = 2;
    r.killed = 0;
    r.degree = 2;
    r.order = 4;
    r.value = Rational(-48);
    r.series = word_trace_series(BraidWord{0, 2, {sigma(1, 1), sigma(1, 1), sigma(1, 1)}},
                                 0, builtin_operator(), 4);
    r.writhe = 3;
    r.components = 1;
    r.operator_id = builtin_operator().convention_id();
    r.seed = 7;

    const nlohmann::json j = nlohmann::json::parse(record_json(r));
    CHECK(j.at("schema_version").get<int>() == 1);
    CHECK(j.at("word").get<std::string>() == "s1 s1 s1");
    CHECK(j.at("g").get<int>() == 0);
    CHECK(j.at("n").get<int>() == 2);
    CHECK(j.at("i").get<int>() == 0);
    CHECK(j.at("d").get<int>() == 2);
    CHECK(j.at("D").get<int>() == 4);
    CHECK(j.at("value").get<std::string>() == "-48");
    REQUIRE(j.at("series").is_array());
    bool saw_deg2 = false;
    for (const auto& pair : j.at("series")) {
        REQUIRE(pair.is_array());
        REQUIRE(pair.size() == 2);
        CHECK(pair[0].is_number_integer());
        CHECK(pair[1].is_string()); // exact rational text, never a float
        if (pair[0].get<int>() == 2) {
            saw_deg2 = true;
            CHECK(pair[1].get<std::string>() == "-48");
        }
    }
    CHECK(saw_deg2);
    CHECK(j.at("metadata").at("writhe").get<int>() == 3);
    CHECK(j.at("metadata").at("components").get<int>() == 1);
    CHECK(j.at("metadata").at("operator").get<std::string>() == "228d57c4");
    CHECK(j.at("metadata").at("seed").get<std::uint32_t>() == 7);
}

TEST_CASE("trace records omit the degree and value fields") {
    RecordInput r;
    r.word = "t1";
    r.genus = 1;
    r.strands = 2;
    r.killed = 1;
    r.order = 2;
    r.series = TruncatedSeries(Rational(-2), 0, 2);
    r.operator_id = "228d57c4";
    const nlohmann::json j = nlohmann::json::parse(record_json(r));
    CHECK(j.at("d").is_null());
    CHECK(j.at("value").is_null());
    CHECK(j.at("D").get<int>() == 2);
}

TEST_CASE("cli: invariant subcommand emits the frozen trefoil value") {
    const RunResult r = run_cmd(kCli + " invariant --strands 2 --word 's1 s1 s1' --d 2 --json");
    REQUIRE(r.status == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("value").get<std::string>() == "-48");
    CHECK(j.at("metadata").at("operator").get<std::string>() == "228d57c4");
}

TEST_CASE("cli: trace of a lone double point is the zero series") {
    const RunResult r = run_cmd(kCli + " trace --strands 2 --word 'a1' --order 3 --json");
    REQUIRE(r.status == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("series").empty());
    CHECK(j.at("d").is_null());
}

TEST_CASE("cli: handle generator trace matches the two-component unlink at order zero") {
    const RunResult r = run_cmd(
        kCli + " trace --genus 1 --strands 2 --word 't1' --i 1 --order 2 --json");
    REQUIRE(r.status == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(!j.at("series").empty());
    CHECK(j.at("series")[0][0].get<int>() == 0);
    CHECK(j.at("series")[0][1].get<std::string>() == "-2");
}

TEST_CASE("cli: exit code contract") {
    CHECK(run_cmd(kCli + " check --suite relations1 --strands 3").status == 0);
    CHECK(run_cmd(kCli + " check --suite nosuch").status == 2);
    CHECK(run_cmd(kCli + " invariant --strands 2 --word 'q9'").status == 2);
    CHECK(run_cmd(kCli + " invariant --strands 2 --word 's5'").status == 2);
    CHECK(run_cmd(kCli + " nosubcommand").status == 2);
    CHECK(run_cmd(kCli + " invariant --strands 0 --word 'e'").status == 2);
    // a degree above the requested order is legal: the order is raised to cover it
    const RunResult raised = run_cmd(
        kCli + " invariant --strands 2 --word 's1' --d 9 --order 3 --json");
    CHECK(raised.status == 0);
    CHECK(nlohmann::json::parse(raised.out).at("D").get<int>() == 9);
}

TEST_CASE("cli: resource bound violations exit with the resource code") {
    const RunResult r = run_cmd(
        "HB_MAX_TENSOR_DIM=8 " + kCli + " invariant --strands 5 --word 's1 s2 s3 s4' --d 0");
    CHECK(r.status == 3);
}

TEST_CASE("cli: operator files and the suite-failure exit code") {
    const std::string good = "/tmp/hb_cli_good_op.txt";
    const std::string bad = "/tmp/hb_cli_bad_op.txt";
    save_operator_file(builtin_operator(), good);
    EYBOperator corrupted = builtin_operator();
    corrupted.R.add(0, 0, LaurentPoly(Rational(1), 5)); // breaks the braid axiom
    save_operator_file(corrupted, bad);

    // a sound operator file passes the axioms suite
    CHECK(run_cmd(kCli + " check --suite eyb --operator " + good).status == 0);
    // the axioms suite judges a corrupted candidate and reports failure
    const RunResult judged = run_cmd(kCli + " check --suite eyb --operator " + bad);
    CHECK(judged.status == 4);
    CHECK(judged.out.find("FAIL") != std::string::npos);
    // every other entry point refuses a corrupted operator outright
    CHECK(run_cmd(kCli + " check --suite markov --depth 1 --operator " + bad).status == 2);
    CHECK(run_cmd(kCli + " invariant --strands 2 --word 's1' --operator " + bad).status == 2);
    // a sound file behaves identically to the built-in operator
    const RunResult viaFile = run_cmd(
        kCli + " invariant --strands 2 --word 's1 s1 s1' --d 2 --json --operator " + good);
    REQUIRE(viaFile.status == 0);
    CHECK(nlohmann::json::parse(viaFile.out).at("value").get<std::string>() == "-48");
    std::remove(good.c_str());
    std::remove(bad.c_str());
}
