#pragma once
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hb/singular.hpp"

namespace hb {

// Defining relations of the classical singular monoid on m strands, stored
// as replacement rules. Both orientations of every rule are legal moves;
// the invertibility rules also supply cancellation and insertion of
// adjacent inverse generator pairs.
struct RewriteRule {
    std::string name;
    std::vector<SingularLetter> lhs;
    std::vector<SingularLetter> rhs;
};

std::vector<RewriteRule> singular_rules(int m);

struct RewriteStep {
    std::size_t rule = 0; // index into singular_rules(m)
    std::size_t pos = 0;  // letter offset where the pattern is replaced
    bool forward = true;  // lhs->rhs when true
};

struct Derivation {
    bool found = false;
    bool capped = false;       // a state cap stopped the search early
    std::size_t explored = 0;  // states generated across both directions
    std::vector<RewriteStep> steps;
};

// Applies one step to a word; throws ValidationError if the pattern does
// not occur at the position. Used by the search and to replay certificates.
SingularWord apply_step(const SingularWord& w, const std::vector<RewriteRule>& rules,
                        const RewriteStep& s);

// Bounded bidirectional breadth-first search for a chain of at most `depth`
// rule applications transforming u into v. Classical ambient only (embed
// handlebody words first). A missing result is only "not found within the
// bounds", never an inequality certificate.
Derivation rewrite_derivation(const SingularWord& u, const SingularWord& v, int depth = 8);

} // namespace hb
