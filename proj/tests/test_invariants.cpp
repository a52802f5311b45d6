#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hb/algebra.hpp"
#include "hb/error.hpp"
#include "hb/invariants.hpp"
#include "hb/series_kernel.hpp"
#include "hb/substitute.hpp"
#include "hb/trace.hpp"

using namespace hb;

namespace {
const BraidWord kTrefoil{0, 2, {sigma(1, 1), sigma(1, 1), sigma(1, 1)}};
const BraidWord kUnknot{0, 2, {sigma(1, 1)}};
} // namespace

TEST_CASE("exponential substitution of a crossing-symmetric polynomial") {
    const LaurentPoly p = LaurentPoly::parse_pairs("1:1,-1:1"); // q + q^-1
    const TruncatedSeries t = exp_substitute(p, 4);
    CHECK(t.coeff(0) == 2);
    CHECK(t.coeff(1) == 0);
    CHECK(t.coeff(2) == 1);
    CHECK(t.coeff(3) == 0);
    CHECK(t.coeff(4) == Rational(1) / 12);
}

TEST_CASE("series reciprocal multiplies back to one") {
    TruncatedSeries s = exp_substitute(LaurentPoly::parse_pairs("2:-1,-2:-1"), 6);
    TruncatedSeries r = series_reciprocal(s, 6);
    TruncatedSeries prod = s * r;
    CHECK(prod.coeff(0) == 1);
    for (int d = 1; d <= 6; ++d) CHECK(prod.coeff(d) == 0);
}

TEST_CASE("trefoil series and its frozen low-order coefficients") {
    const TruncatedSeries t = word_trace_series(kTrefoil, 0, builtin_operator(), 4);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(1) == 0);
    CHECK(t.coeff(2) == -48);
    CHECK(t.coeff(3) == 384);
    CHECK(t.coeff(4) == -1856);
}

TEST_CASE("degree-one coefficients vanish on classical knots") {
    // first-order invariants of one-component classical closures are trivial;
    // multi-component closures carry linking numbers at degree one, so the
    // check filters to knots
    int knots = 0;
    for (std::uint32_t s = 0; s < 200 && knots < 12; ++s) {
        const BraidWord w = random_handlebody_word(0, 2 + s % 3, 7, s);
        if (closure_components(w) != 1) continue;
        ++knots;
        const TruncatedSeries t = word_trace_series(w, 0, builtin_operator(), 1);
        INFO(word_str(w));
        CHECK(t.coeff(1) == 0);
    }
    CHECK(knots == 12);
}

TEST_CASE("the degree-two invariant separates the trefoil from the unknot") {
    CHECK(separation_degree(kTrefoil, kUnknot, 0, 4, builtin_operator()) == 2);
}

TEST_CASE("invariant result carries exact metadata") {
    const InvariantResult res = link_invariant(kTrefoil, 0, 2, builtin_operator(), 6);
    CHECK(res.value == -48);
    CHECK(res.writhe_value == 3);
    CHECK(res.components == 1);
    CHECK(res.operator_id == "228d57c4");
    CHECK(res.order == 6);
}

TEST_CASE("trace of a single expanded double point vanishes identically") {
    SingularWord a1{0, 2, {sband(1)}};
    const TraceValue tv = trace_of_element(expand(a1), 0, builtin_operator());
    CHECK(tv.parts.empty());
}

TEST_CASE("extended invariant witness at band count = degree = 2") {
    SingularWord w{0, 2, {sband(1), sband(1)}};
    CHECK(extended_invariant(w, 0, 2, builtin_operator(), 6) == -96);
    CHECK(extended_invariant(w, 0, 0, builtin_operator(), 6) == 0);
    CHECK(extended_invariant(w, 0, 1, builtin_operator(), 6) == 0);
}

TEST_CASE("extended invariants vanish below the band count") {
    for (std::uint32_t s = 60; s < 64; ++s) {
        const SingularWord w = random_monoid_word(1, 3, 3, 3, s);
        for (int killed = 0; killed <= 1; ++killed) {
            const Report rep = degree_vanishing_check(w, killed, 2, builtin_operator(), 6);
            INFO(singular_word_str(w) << " killed=" << killed);
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("expanded singular traces have no pole part") {
    for (std::uint32_t s = 70; s < 74; ++s) {
        const SingularWord w = random_monoid_word(0, 3, 4, 2, s);
        const TruncatedSeries t = singular_trace_series(w, 0, builtin_operator(), 3);
        INFO(singular_word_str(w));
        CHECK(t.valuation() >= 0);
    }
}

TEST_CASE("series kernel agrees with exact evaluation then substitution") {
    const EYBOperator& op = builtin_operator();
    const SeriesOperator sop = substitute_operator(op, 5);
    for (std::uint32_t s = 80; s < 86; ++s) {
        const BraidWord w = random_handlebody_word(s % 3, 2, 6, s);
        for (int killed = 0; killed <= w.genus; ++killed) {
            const TruncatedSeries fast = collapsed_trace_series(w, killed, sop);
            const TruncatedSeries slow = exp_substitute(collapsed_trace(w, killed, op), 5);
            INFO(word_str(w) << " killed=" << killed);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("graded element traces match the series route") {
    SingularWord s{1, 2, {sband(1), ssigma(1, 1), stau(1, -1)}};
    const AlgebraElement x = expand(s);
    for (int killed = 0; killed <= 1; ++killed) {
        const TraceValue exact = trace_of_element(x, killed, builtin_operator());
        CHECK(eps_series(exact, 5) == element_trace_series(x, killed, builtin_operator(), 5));
    }
}

TEST_CASE("invariants are constant along short random move sequences") {
    const BraidWord w = random_handlebody_word(1, 2, 4, 321u);
    const Report rep = markov_orbit_check(w, 1, 2, builtin_operator(), 2, 12, 5u);
    for (const auto& it : rep.items) {
        INFO(it.detail);
        CHECK(it.pass);
    }
}

TEST_CASE("two presentations of one link give one invariant value") {
    // recompute from an n-strand and a stabilized (n+1)-strand presentation
    for (std::uint32_t s = 90; s < 94; ++s) {
        BraidWord w = random_handlebody_word(s % 2, 2, 5, s);
        BraidWord stab = w;
        stab.strands += 1;
        stab.letters.push_back(sigma(w.strands, 1));
        for (int d = 0; d <= 2; ++d) {
            const Rational a = link_invariant(w, 0, d, builtin_operator(), 2).value;
            const Rational b = link_invariant(stab, 0, d, builtin_operator(), 2).value;
            INFO(word_str(w) << " degree " << d);
            CHECK(a == b);
        }
    }
}

TEST_CASE("a split unknot multiplies the trace by the loop value") {
    const Report rep = split_union_check(kTrefoil, 0, builtin_operator());
    REQUIRE(rep.items.size() == 2);
    // the z = 1 union identity does not hold for this operator...
    CHECK(!rep.items[0].pass);
    // ...the measured factor is exactly the loop value
    CHECK(rep.items[1].informational);
    CHECK(rep.items[1].pass);
}

TEST_CASE("integrality of series coefficients is reported, not assumed") {
    // low orders of the trefoil series are integral; order six is not
    const TruncatedSeries t5 = word_trace_series(kTrefoil, 0, builtin_operator(), 5);
    CHECK(t5.integer_coefficients());
    const TruncatedSeries t6 = word_trace_series(kTrefoil, 0, builtin_operator(), 6);
    CHECK(!t6.integer_coefficients());
    const InvariantResult res = link_invariant(kTrefoil, 0, 2, builtin_operator(), 6);
    CHECK(res.integral_series == t6.integer_coefficients());
}

TEST_CASE("degree must not exceed the truncation order") {
    CHECK_THROWS_AS(link_invariant(kTrefoil, 0, 7, builtin_operator(), 6), ValidationError);
}
