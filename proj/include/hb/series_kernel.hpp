#pragma once
#include <map>
#include <vector>

#include "hb/algebra.hpp"
#include "hb/braid.hpp"
#include "hb/eyb.hpp"
#include "hb/series.hpp"

namespace hb {

// The operator with q = exp(eps) substituted into every entry, truncated at
// a fixed order. Traces over this operator cost a bounded amount per ring
// operation regardless of word length, unlike exact Laurent polynomials
// whose term count grows with the writhe span — this is the fast evaluation
// path for the randomized harnesses and for series output. Its results are
// cross-checked against substitute-after-exact-trace in the tests.
struct SeriesOperator {
    int dim = 0;
    int order = 0;
    std::vector<std::map<int, TruncatedSeries>> r_cols;
    std::vector<std::map<int, TruncatedSeries>> rinv_cols;
    std::vector<TruncatedSeries> mu;
    LaurentPoly alpha; // exact monomials, substituted per power at use sites
    LaurentPoly beta;
    TruncatedSeries loop_inverse; // 1 / substituted (trace(mu)/beta)
};

SeriesOperator substitute_operator(const EYBOperator& op, int order);

// Series counterparts of markov_trace / collapsed_trace (same normalization,
// including the reduction by the one-loop value).
TruncatedSeries markov_trace_series(const BraidWord& w, const SeriesOperator& sop);
TruncatedSeries collapsed_trace_series(const BraidWord& w, int killed, const SeriesOperator& sop);

// Linear extension over a formal combination; coefficients with negative
// valuation automatically deepen the working order so the result is still
// correct to `order`.
TruncatedSeries element_trace_series(const AlgebraElement& x, int killed, const EYBOperator& op,
                                     int order);

} // namespace hb
