#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "hb/braid.hpp"
#include "hb/invariants.hpp"
#include "hb/series.hpp"
#include "hb/singular.hpp"

namespace hb {

// Word text is whitespace-separated tokens s<i>, t<k>, a<i>, each optionally
// followed by ^<integer>; exponents expand eagerly into repeated letters.
// "e" (or an empty string) is the empty word. a-tokens are admitted only by
// the singular parser, with nonnegative exponents.
BraidWord parse_braid_word(const std::string& text, int genus, int strands);
SingularWord parse_singular_word(const std::string& text, int genus, int strands);

// Canonical printing round-trips with the parsers (word_str /
// singular_word_str produce it; re-parsing gives the same letters).

// Crossing exponent sum of a singular word; double points do not count.
int singular_writhe(const SingularWord& w);
// Component count of the closure; a double point joins strands like a
// crossing for this purpose.
int singular_closure_components(const SingularWord& w);

// Machine-readable result document. All numbers are exact; rationals are
// printed as decimal strings "p" or "p/q". The schema is versioned
// (schema_version field, currently 1) and documented in the README.
struct RecordInput {
    std::string word;
    int genus = 0;
    int strands = 1;
    int killed = 0;
    std::optional<int> degree;     // absent for plain trace output
    int order = 0;                 // truncation order D
    std::optional<Rational> value; // absent for plain trace output
    TruncatedSeries series;
    int writhe = 0;
    int components = 0;
    std::string operator_id;
    std::uint32_t seed = 0;
};

std::string record_json(const RecordInput& r);
std::string record_table(const RecordInput& r);

} // namespace hb
