#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "hb/braid.hpp"
#include "hb/error.hpp"
#include "hb/eyb.hpp"
#include "hb/tensor.hpp"
#include "hb/trace.hpp"
#include "kauffman_oracle.hpp"

using namespace hb;

TEST_CASE("built-in operator satisfies all axioms") {
    const Report rep = eyb_axioms_check(builtin_operator());
    for (const auto& it : rep.items) {
        INFO(it.name);
        CHECK(it.pass);
    }
    CHECK(rep.items.size() == 8);
}

TEST_CASE("corrupted operator fails the axioms (negative control)") {
    EYBOperator bad = builtin_operator();
    bad.R.set(0, 1, LaurentPoly(Rational(1), 2));
    const Report rep = eyb_axioms_check(bad);
    CHECK(!rep.all_pass());
}

TEST_CASE("partial traces are the prescribed scalars") {
    const EYBOperator& op = builtin_operator();
    const LaurentPoly scalar = op.alpha * op.beta;
    PolyMatrix expect = PolyMatrix::identity(2);
    for (int i = 0; i < 2; ++i) expect.set(i, i, scalar);
    CHECK(partial_trace_second(op.R, op.mu) == expect);

    const LaurentPoly inv_scalar = op.alpha.unit_inverse() * op.beta;
    PolyMatrix expect_inv = PolyMatrix::identity(2);
    for (int i = 0; i < 2; ++i) expect_inv.set(i, i, inv_scalar);
    CHECK(partial_trace_second(op.Rinv, op.mu) == expect_inv);
}

TEST_CASE("operator file round trip") {
    const std::string path = "/tmp/hb_test_operator.txt";
    save_operator_file(builtin_operator(), path);
    const EYBOperator loaded = load_operator_file(path);
    CHECK(loaded.convention_id() == builtin_operator().convention_id());
    CHECK(loaded.R == builtin_operator().R);
    CHECK(loaded.mu == builtin_operator().mu);
    std::remove(path.c_str());
}

TEST_CASE("loading rejects a file that breaks the axioms") {
    const std::string path = "/tmp/hb_test_operator_bad.txt";
    EYBOperator bad = builtin_operator();
    bad.R.set(1, 1, LaurentPoly(Rational(7)));
    save_operator_file(bad, path);
    CHECK_THROWS_AS(load_operator_file(path), ValidationError);
    std::remove(path.c_str());
}

TEST_CASE("tensor representation is multiplicative") {
    const EYBOperator& op = builtin_operator();
    for (std::uint32_t s = 1; s <= 5; ++s) {
        const BraidWord u = random_handlebody_word(0, 3, 4, 2 * s);
        const BraidWord v = random_handlebody_word(0, 3, 4, 2 * s + 1);
        BraidWord uv = u;
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        CHECK(rho_matrix(uv, op) == rho_matrix(u, op) * rho_matrix(v, op));
    }
}

TEST_CASE("tensor representation respects the braid relations") {
    const EYBOperator& op = builtin_operator();
    BraidWord b1{0, 3, {sigma(1, 1), sigma(2, 1), sigma(1, 1)}};
    BraidWord b2{0, 3, {sigma(2, 1), sigma(1, 1), sigma(2, 1)}};
    CHECK(rho_matrix(b1, op) == rho_matrix(b2, op));
    BraidWord f1{0, 4, {sigma(1, 1), sigma(3, 1)}};
    BraidWord f2{0, 4, {sigma(3, 1), sigma(1, 1)}};
    CHECK(rho_matrix(f1, op) == rho_matrix(f2, op));
}

TEST_CASE("monoid relations hold for the matrix form of double points") {
    const EYBOperator& op = builtin_operator();
    // a1 s1 = s1 a1 at the matrix level
    SingularWord l1{0, 2, {sband(1), ssigma(1, 1)}};
    SingularWord r1{0, 2, {ssigma(1, 1), sband(1)}};
    CHECK(singular_matrix(l1, op) == singular_matrix(r1, op));
    // a1 s2 s1 = s2 s1 a2
    SingularWord l2{0, 3, {sband(1), ssigma(2, 1), ssigma(1, 1)}};
    SingularWord r2{0, 3, {ssigma(2, 1), ssigma(1, 1), sband(2)}};
    CHECK(singular_matrix(l2, op) == singular_matrix(r2, op));
}

TEST_CASE("normalized trace of small closures") {
    const EYBOperator& op = builtin_operator();
    BraidWord empty1{0, 1, {}};
    CHECK(markov_trace(empty1, op) == LaurentPoly(Rational(1)));
    BraidWord s1{0, 2, {sigma(1, 1)}};
    CHECK(markov_trace(s1, op) == LaurentPoly(Rational(1)));
    BraidWord empty2{0, 2, {}};
    CHECK(markov_trace(empty2, op) == LaurentPoly::parse_pairs("2:-1,-2:-1"));
    BraidWord trefoil{0, 2, {sigma(1, 1), sigma(1, 1), sigma(1, 1)}};
    CHECK(markov_trace(trefoil, op) == LaurentPoly::parse_pairs("-4:1,-12:1,-16:-1"));
    BraidWord hopf{0, 2, {sigma(1, 1), sigma(1, 1)}};
    CHECK(markov_trace(hopf, op) == LaurentPoly::parse_pairs("-2:-1,-10:-1"));
}

TEST_CASE("trace equals the independent state-sum oracle") {
    const EYBOperator& op = builtin_operator();
    // named cases plus random classical words
    std::vector<BraidWord> words = {
        {0, 2, {sigma(1, 1), sigma(1, 1), sigma(1, 1)}},
        {0, 2, {sigma(1, 1), sigma(1, 1)}},
        {0, 2, {sigma(1, -1), sigma(1, -1), sigma(1, -1)}},
    };
    for (std::uint32_t s = 30; s < 36; ++s) words.push_back(random_handlebody_word(0, 3, 6, s));
    for (const auto& w : words) {
        INFO(word_str(w));
        CHECK(markov_trace(w, op) == oracle::kauffman_normalized(w));
    }
}

TEST_CASE("trace is invariant under conjugation and stabilization") {
    const EYBOperator& op = builtin_operator();
    const Report rep = markov_trace_suite(op, 2, 777u);
    for (const auto& it : rep.items) {
        if (it.informational) continue;
        INFO(it.name);
        CHECK(it.pass);
    }
}

TEST_CASE("handle collapse composes with the embedding") {
    const EYBOperator& op = builtin_operator();
    BraidWord t1{1, 1, {tau(1, 1)}};
    // killing the handle leaves a 1-strand identity
    CHECK(collapsed_trace(t1, 1, op) == LaurentPoly(Rational(1)));
    // keeping it closes tau_1 into a two-component chain
    CHECK(collapsed_trace(t1, 0, op) == LaurentPoly::parse_pairs("-2:-1,-10:-1"));
}

TEST_CASE("convention id is stable") {
    CHECK(builtin_operator().convention_id() == "228d57c4");
}
