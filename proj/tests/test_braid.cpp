#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hb/braid.hpp"
#include "hb/error.hpp"
#include "hb/trace.hpp"

using namespace hb;

TEST_CASE("word validation") {
    BraidWord ok{1, 3, {sigma(1, 1), sigma(2, -1), tau(1, 1)}};
    CHECK_NOTHROW(validate_word(ok));
    BraidWord bad_index{0, 2, {sigma(2, 1)}};
    CHECK_THROWS_AS(validate_word(bad_index), ValidationError);
    BraidWord bad_tau{0, 2, {tau(1, 1)}};
    CHECK_THROWS_AS(validate_word(bad_tau), ValidationError);
    BraidWord bad_shape{-1, 2, {}};
    CHECK_THROWS_AS(validate_word(bad_shape), ValidationError);
}

TEST_CASE("free reduction and inversion") {
    BraidWord w{1, 2, {sigma(1, 1), sigma(1, -1), tau(1, 1)}};
    const BraidWord r = free_reduce(w);
    REQUIRE(r.letters.size() == 1);
    CHECK(r.letters[0].kind == Gen::Tau);

    BraidWord v{1, 3, {sigma(1, 1), tau(1, -1), sigma(2, 1)}};
    BraidWord vv = invert_word(v);
    BraidWord prod = v;
    prod.letters.insert(prod.letters.end(), vv.letters.begin(), vv.letters.end());
    CHECK(free_reduce(prod).letters.empty());
}

TEST_CASE("embedding sends crossing letters past the handle strands") {
    // On g handle strands + n moving strands, s_i becomes the Artin letter at
    // position g+i, and t_k becomes a conjugated square reaching strand k.
    BraidWord w{2, 2, {sigma(1, 1)}};
    const BraidWord e = embed_handlebody(w);
    CHECK(e.genus == 0);
    CHECK(e.strands == 4);
    REQUIRE(e.letters.size() == 1);
    CHECK(e.letters[0].index == 3);

    BraidWord t2w{2, 1, {tau(2, 1)}};
    const BraidWord e2 = embed_handlebody(t2w);
    REQUIRE(e2.letters.size() == 2);
    CHECK(e2.letters[0].index == 2);
    CHECK(e2.letters[1].index == 2);

    BraidWord t1w{2, 1, {tau(1, 1)}};
    const BraidWord e1 = embed_handlebody(t1w);
    REQUIRE(e1.letters.size() == 4);
    // sigma_2 sigma_1 sigma_1 sigma_2^-1
    CHECK(e1.letters[0].index == 2);
    CHECK(e1.letters[1].index == 1);
    CHECK(e1.letters[2].index == 1);
    CHECK(e1.letters[3].index == 2);
    CHECK(e1.letters[3].exp == -1);
}

TEST_CASE("signature equality decides the word problem on relation instances") {
    // far commutation needs n >= 4
    BraidWord lhs{0, 4, {sigma(1, 1), sigma(3, 1)}};
    BraidWord rhs{0, 4, {sigma(3, 1), sigma(1, 1)}};
    CHECK(words_equal(lhs, rhs));

    BraidWord b1{0, 3, {sigma(1, 1), sigma(2, 1), sigma(1, 1)}};
    BraidWord b2{0, 3, {sigma(2, 1), sigma(1, 1), sigma(2, 1)}};
    CHECK(words_equal(b1, b2));

    BraidWord x{0, 3, {sigma(1, 1)}};
    BraidWord y{0, 3, {sigma(2, 1)}};
    CHECK(!words_equal(x, y));

    // handle relations: tau_k commutes with sigma_i for i >= 2
    BraidWord h1{1, 3, {tau(1, 1), sigma(2, 1)}};
    BraidWord h2{1, 3, {sigma(2, 1), tau(1, 1)}};
    CHECK(words_equal(h1, h2));
    BraidWord h3{1, 2, {tau(1, 1), sigma(1, 1)}};
    BraidWord h4{1, 2, {sigma(1, 1), tau(1, 1)}};
    CHECK(!words_equal(h3, h4));
}

TEST_CASE("signatures compose contravariantly with concatenation") {
    BraidWord u{1, 3, {sigma(1, 1), tau(1, 1)}};
    BraidWord v{1, 3, {sigma(2, -1), sigma(1, 1)}};
    BraidWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    const ArtinSignature su = artin_signature(embed_handlebody(u));
    const ArtinSignature sv = artin_signature(embed_handlebody(v));
    const ArtinSignature suv = artin_signature(embed_handlebody(uv));
    CHECK(suv == compose_signatures(su, sv));
}

TEST_CASE("presentation relations hold under the signature oracle") {
    const Report rep = relation_suite_braid(3, 4);
    for (const auto& it : rep.items) {
        if (it.informational) continue;
        INFO(it.name);
        CHECK(it.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.items.size() > 20);
}

TEST_CASE("writhe counts crossing exponents, handles twice") {
    BraidWord w{1, 3, {sigma(1, 1), sigma(2, -1), tau(1, 1), sigma(1, 1)}};
    CHECK(writhe(w) == 3); // 1 - 1 + 2 + 1
    CHECK(writhe(embed_handlebody(w)) == writhe(w));
}

TEST_CASE("closure component count") {
    BraidWord unknot{0, 2, {sigma(1, 1)}};
    CHECK(closure_components(unknot) == 1);
    BraidWord unlink{0, 2, {}};
    CHECK(closure_components(unlink) == 2);
    BraidWord hopf{0, 2, {sigma(1, 1), sigma(1, 1)}};
    CHECK(closure_components(hopf) == 2);
    // each handle closes to its own component in the mixed-link picture
    BraidWord th{1, 2, {tau(1, 1)}};
    CHECK(closure_components(th) == 3);
}

TEST_CASE("random words are valid and reproducible") {
    const BraidWord a = random_handlebody_word(2, 3, 12, 99u);
    const BraidWord b = random_handlebody_word(2, 3, 12, 99u);
    CHECK_NOTHROW(validate_word(a));
    CHECK(a.letters.size() == 12);
    CHECK(words_equal(a, b));
}
