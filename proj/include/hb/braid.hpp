#pragma once
#include <string>
#include <vector>

#include "hb/freeword.hpp"
#include "hb/report.hpp"

namespace hb {

// Generators of the genus-g handlebody braid group on n strands:
//   sigma_i  (1 <= i <= n-1)  half-twist of braided strands i, i+1
//   tau_k    (1 <= k <= g)    loop of the first braided strand around handle k
// Classical braid groups are the genus-0 case.
enum class Gen : unsigned char { Sigma, Tau };

struct BraidLetter {
    Gen kind = Gen::Sigma;
    int index = 1;
    int exp = 1; // +1 or -1

    bool operator==(const BraidLetter&) const = default;
};

inline BraidLetter sigma(int i, int e = 1) { return {Gen::Sigma, i, e}; }
inline BraidLetter tau(int k, int e = 1) { return {Gen::Tau, k, e}; }

struct BraidWord {
    int genus = 0;
    int strands = 1;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;
};

// Throws ValidationError (with letter position) on out-of-range indices,
// exponents other than +-1, or tau letters in a genus-0 word.
void validate_word(const BraidWord& w);

// Cancels adjacent inverse letter pairs until none remain.
BraidWord free_reduce(BraidWord w);

BraidWord invert_word(const BraidWord& w);

// Classical word representing tau_k inside the (g+n)-strand braid group:
// a conjugate of the square of generator k by the descending run from g.
// `strands` must be at least g+1; it defaults to the minimal g+1.
BraidWord tau_expansion(int k, int g, int strands = -1);

// Image of a handlebody word under the embedding into the classical braid
// group on g+n strands: sigma_i -> generator g+i, tau_k -> tau_expansion.
BraidWord embed_handlebody(const BraidWord& w);

// Action on the free group F_m (m = strand count): generator i maps
//   x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i,  others fixed,
// with signatures composing contravariantly: the signature of u.v is the
// signature of v applied after the signature of u.
struct ArtinSignature {
    std::vector<FreeWord> images; // images[j] = image of x_{j+1}

    bool operator==(const ArtinSignature&) const = default;
    auto operator<=>(const ArtinSignature& o) const { return images <=> o.images; }
    bool is_identity() const;
    std::size_t total_letters() const;
};

// Classical words only (genus 0). Faithful: equal signatures <=> equal
// group elements. Throws ResourceError past the image-length limit.
ArtinSignature artin_signature(const BraidWord& w);

ArtinSignature compose_signatures(const ArtinSignature& first, const ArtinSignature& second);

// Group-element equality for handlebody words with matching ambient
// (genus, strands): embed then compare signatures.
bool words_equal(const BraidWord& u, const BraidWord& v);

// Exponent sum; tau letters count twice (their classical image has two
// crossings of equal sign).
int writhe(const BraidWord& w);

// Component count of the closed-up link: cycles of the permutation the
// braided strands induce, plus one core circle per handle.
int closure_components(const BraidWord& w);

// Verifies every defining relation instance of the handlebody presentation
// at this (genus, strands) via the embedding, plus the interval-conjugation
// family in its symmetric form; the unbalanced printed variant of the
// latter is evaluated and reported informationally.
Report relation_suite_braid(int g, int n);

std::string letter_str(const BraidLetter& l);
std::string word_str(const BraidWord& w);

} // namespace hb
