#pragma once
#include <cstdint>
#include <string>

#include "hb/algebra.hpp"
#include "hb/braid.hpp"
#include "hb/eyb.hpp"
#include "hb/rational.hpp"
#include "hb/report.hpp"
#include "hb/series.hpp"
#include "hb/singular.hpp"
#include "hb/substitute.hpp"
#include "hb/trace.hpp"

namespace hb {

// eps-series of a graded trace value via the exact route: each eps^e part
// contributes eps^e * exp_substitute(part, order - e).
TruncatedSeries eps_series(const TraceValue& v, int order);

// The eps^d term of a series as the monomial c*eps^d; d must not exceed the
// series' known order.
TruncatedSeries homogeneous_part(const TruncatedSeries& t, int d);

// Series of the collapsed trace with q = exp(eps), truncated at `order` —
// of a braid word, or of a singular word through its band expansion.
TruncatedSeries word_trace_series(const BraidWord& w, int killed, const EYBOperator& op, int order);
TruncatedSeries singular_trace_series(const SingularWord& s, int killed, const EYBOperator& op,
                                      int order);

struct InvariantResult {
    int genus = 0;
    int strands = 0;
    BraidWord word;
    int killed = 0; // handle-collapse level
    int degree = 0; // extraction degree d
    int order = 8;  // truncation order used
    Rational value; // coefficient at eps^degree
    TruncatedSeries series;
    int writhe_value = 0;
    int components = 0;
    bool integral_series = false;
    std::string operator_id;
};

// Degree-d invariant of the closure link: the eps^degree coefficient of the
// collapsed trace series. Constant on Markov classes (a tested property).
InvariantResult link_invariant(const BraidWord& w, int killed, int degree, const EYBOperator& op,
                               int order);

// Extended evaluation on a singular word with l bands: the alternating sum
// of the invariant over the 2^l resolutions, read off as the coefficient at
// eps^(degree - l) of the expansion's trace series.
Rational extended_invariant(const SingularWord& s, int killed, int degree, const EYBOperator& op,
                            int order);

// For one singular word: pole cancellation (no negative eps powers in the
// trace series) and vanishing of every extended degree-d value with d below
// the band count, up to degree_max.
Report degree_vanishing_check(const SingularWord& s, int killed, int degree_max,
                              const EYBOperator& op, int order);

// Deterministic corpus across shapes (genus <= genus_max, 2..strands_max
// strands, 1..bands_max bands) plus a nonzero witness at bands = degree = 2.
Report vanishing_suite(const EYBOperator& op, int genus_max = 2, int strands_max = 3,
                       int bands_max = 4, int degree_max = 3, int order = 6,
                       std::uint32_t seed = 7171u);

// Seeded monoid word: `bands` band letters and `braid_letters` mixed strand
// and handle letters in random order.
SingularWord random_monoid_word(int genus, int strands, int bands, int braid_letters,
                                std::uint32_t seed);

// Random Markov moves — single-letter conjugation, both-sign stabilization,
// destabilization when syntactically applicable — re-extracting the
// invariant after every move and requiring exact equality with the start.
Report markov_orbit_check(const BraidWord& w, int killed, int degree, const EYBOperator& op,
                          int order, int moves, std::uint32_t seed, int strand_cap = 6);

Report markov_orbit_suite(const EYBOperator& op, int seeds = 20, int moves = 50, int order = 4,
                          std::uint32_t seed = 424242u);

// Disjoint union with one unbraided strand: compares values degree by degree
// with unit scaling and reports both measured series.
Report split_union_check(const BraidWord& w, int killed, const EYBOperator& op);

// Smallest degree <= degree_max where the two closures differ; -1 if none.
int separation_degree(const BraidWord& a, const BraidWord& b, int killed, int degree_max,
                      const EYBOperator& op);

} // namespace hb
