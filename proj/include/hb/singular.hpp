#pragma once
#include <string>
#include <vector>

#include "hb/braid.hpp"
#include "hb/report.hpp"

namespace hb {

// Singular braid monoid words add band generators a_i (transverse
// double-point letters) to the braid generators. a_i letters are not
// invertible: monoid words carry them with exponent +1 only. Negative
// a-exponents are admitted solely as degree bookkeeping; every operation
// except degree() rejects them.
enum class SGen : unsigned char { Sigma, Tau, A };

struct SingularLetter {
    SGen kind = SGen::Sigma;
    int index = 1;
    int exp = 1;

    bool operator==(const SingularLetter&) const = default;
};

inline SingularLetter ssigma(int i, int e = 1) { return {SGen::Sigma, i, e}; }
inline SingularLetter stau(int k, int e = 1) { return {SGen::Tau, k, e}; }
inline SingularLetter sband(int i, int e = 1) { return {SGen::A, i, e}; }

struct SingularWord {
    int genus = 0;
    int strands = 1;
    std::vector<SingularLetter> letters;

    bool operator==(const SingularWord&) const = default;
};

SingularWord singular_of_braid(const BraidWord& w);

// Require a+1-only band letters on top of index validation.
void validate_singular(const SingularWord& w, bool allow_signed_bands = false);

// Image in the classical singular monoid on g+n strands: sigma_i and a_i
// shift by g, tau letters expand to their classical conjugate form.
SingularWord embed_singular(const SingularWord& w);

// Sum of band-letter exponents (the only operation accepting signed bands).
int degree(const SingularWord& w);

// Delete all band letters (a section of the inclusion of braid words).
BraidWord desingularize_erase(const SingularWord& w);

// Replace each band letter by the positive braid generator of equal index.
BraidWord desingularize_overcross(const SingularWord& w);

// tau_i tau_{i+1} ... tau_m as a word over (genus, strands).
SingularWord tau_interval(int i, int m, int genus, int strands);

// Group-algebra equality through the sign-distribution expansion (declared
// here, implemented with the algebra module).
bool singular_words_equal(const SingularWord& u, const SingularWord& v);

// Checks the interval-conjugation identity
//   T s T a = a T s T,  T = interval i..g expanded classically,
// with s, a the generator/band letters at index g+1 on g+n strands, via the
// expansion oracle and the two desingularizations; also attempts a
// relation-rewriting derivation certificate. The handlebody form of the
// same identity (conjugating a_1 by the interval and sigma_1) is checked
// through the embedding.
Report interval_band_conjugation_check(int g, int n, int i, int depth = 8);

// Every relation instance of the classical singular monoid presentation on
// m strands, decided by the expansion oracle; both desingularizations are
// applied to each side as consistency witnesses.
Report relation_suite_singular(int m);

std::string singular_letter_str(const SingularLetter& l);
std::string singular_word_str(const SingularWord& w);

} // namespace hb
