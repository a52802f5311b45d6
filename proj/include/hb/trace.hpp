#pragma once
#include <cstdint>
#include <map>
#include <string>

#include "hb/algebra.hpp"
#include "hb/braid.hpp"
#include "hb/eyb.hpp"
#include "hb/report.hpp"

namespace hb {

// Value of a trace extended over formal band expansions: a finite sum of
// eps-powers with Laurent-polynomial coefficients in q. `order` records
// truncation metadata exactly as in TruncatedSeries; equality compares
// coefficient data only.
struct TraceValue {
    std::map<int, LaurentPoly> parts;
    int order = TruncatedSeries::kExact;

    bool is_zero() const { return parts.empty(); }
    LaurentPoly coeff(int eps_exp) const;
    // Smallest eps exponent present; kExact for zero.
    int valuation() const;
    void add_part(int eps_exp, const LaurentPoly& p);

    TraceValue operator+(const TraceValue& o) const;
    TraceValue operator-(const TraceValue& o) const;
    TraceValue scaled(const LaurentPoly& c) const;
    bool operator==(const TraceValue& o) const { return parts == o.parts; }

    std::string str() const;
};

// Normalized Markov trace of a classical braid word:
//   alpha^(-writhe) beta^(-strands) sum_v mu_weight(v) (rho(w) e_v)[v],
// divided once by the one-loop value trace(mu)/beta so the 1-strand identity
// maps to exactly 1 (the division is exact; see markov_trace in trace.cpp).
// Invariant under conjugation and under adding a strand with one extra
// positive or negative crossing, so it is a function of the closure link.
LaurentPoly markov_trace(const BraidWord& w, const EYBOperator& op);

// Map a handlebody word to one with the first `killed` handles removed:
// tau_j -> identity for j <= killed, tau_j -> tau_{j-killed} otherwise.
BraidWord collapse_handles(const BraidWord& w, int killed);

// Trace of a handlebody braid word after collapsing the first `killed`
// handles and embedding the remaining handles as classical strands.
LaurentPoly collapsed_trace(const BraidWord& w, int killed, const EYBOperator& op);

// Linear extension over a formal combination of handlebody braid words.
TraceValue trace_of_element(const AlgebraElement& e, int killed, const EYBOperator& op);

// Randomized verification of the trace properties: conjugation invariance
// and invariance under both signs of strand stabilization, for every number
// of killed handles, across several genera/strand counts. Seeded.
Report markov_trace_suite(const EYBOperator& op, int words_per_case = 6,
                          std::uint32_t seed = 20240915u);

// Random word in Br_n^g with the given number of letters (exponents +-1).
BraidWord random_handlebody_word(int genus, int strands, int length, std::uint32_t seed);

} // namespace hb
