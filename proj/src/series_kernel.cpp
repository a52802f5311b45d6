#include "hb/series_kernel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hb/substitute.hpp"
#include "hb/tensor.hpp"
#include "hb/tensor_apply.hpp"
#include "hb/trace.hpp"

namespace hb {

namespace {

struct SeriesLocal {
    const std::vector<std::map<int, TruncatedSeries>>* cols;
    const std::map<int, TruncatedSeries>& col(int c) const {
        return (*cols)[static_cast<std::size_t>(c)];
    }
};

std::vector<std::map<int, TruncatedSeries>> substitute_cols(const PolyMatrix& m, int order) {
    std::vector<std::map<int, TruncatedSeries>> cols(static_cast<std::size_t>(m.dim()));
    for (int c = 0; c < m.dim(); ++c)
        for (const auto& [r, v] : m.col(c)) cols[static_cast<std::size_t>(c)].emplace(r, exp_substitute(v, order));
    return cols;
}

} // namespace

SeriesOperator substitute_operator(const EYBOperator& op, int order) {
    SeriesOperator s;
    s.dim = op.dim;
    s.order = order;
    s.r_cols = substitute_cols(op.R, order);
    s.rinv_cols = substitute_cols(op.Rinv, order);
    s.mu.reserve(op.mu.size());
    for (const auto& m : op.mu) s.mu.push_back(exp_substitute(m, order));
    s.alpha = op.alpha;
    s.beta = op.beta;
    s.loop_inverse = series_reciprocal(
        exp_substitute(op.loop_value() * op.beta.unit_inverse(), order), order);
    return s;
}

TruncatedSeries markov_trace_series(const BraidWord& w, const SeriesOperator& sop) {
    validate_word(w);
    if (w.genus != 0)
        throw ValidationError("markov_trace_series: expects a word on strands only");
    const int n = tensor_dim(sop.dim, w.strands);
    const SeriesLocal r{&sop.r_cols}, rinv{&sop.rinv_cols};

    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<TruncatedSeries> partial(static_cast<std::size_t>(nthreads),
                                         TruncatedSeries::zero(sop.order));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n; ++c) {
        std::map<int, TruncatedSeries> col;
        col.emplace(c, TruncatedSeries::one(sop.order));
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            const int reps = it->exp > 0 ? it->exp : -it->exp;
            for (int k = 0; k < reps; ++k) {
                if (it->exp > 0)
                    col = apply_pair_slot(col, r, sop.dim, w.strands, it->index - 1);
                else
                    col = apply_pair_slot(col, rinv, sop.dim, w.strands, it->index - 1);
            }
        }
        auto hit = col.find(c);
        if (hit == col.end()) continue;
        TruncatedSeries weight = hit->second;
        int x = c;
        for (int slot = 0; slot < w.strands; ++slot) {
            weight = weight * sop.mu[static_cast<std::size_t>(x % sop.dim)];
            x /= sop.dim;
        }
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        partial[static_cast<std::size_t>(tid)] += weight;
    }
    TruncatedSeries raw = TruncatedSeries::zero(sop.order);
    for (const auto& p : partial) raw += p;

    const int e = writhe(w);
    const LaurentPoly norm = sop.alpha.pow(-e) * sop.beta.pow(-w.strands);
    return (raw * exp_substitute(norm, sop.order) * sop.loop_inverse).truncated_to(sop.order);
}

TruncatedSeries collapsed_trace_series(const BraidWord& w, int killed, const SeriesOperator& sop) {
    return markov_trace_series(embed_handlebody(collapse_handles(w, killed)), sop);
}

TruncatedSeries element_trace_series(const AlgebraElement& x, int killed, const EYBOperator& op,
                                     int order) {
    if (order == TruncatedSeries::kExact)
        throw ValidationError("element_trace_series: a finite truncation order is required");
    int headroom = 0;
    for (const auto& [key, term] : x.terms()) {
        (void)key;
        const int v = term.coeff.valuation();
        if (v != TruncatedSeries::kExact && v < 0) headroom = std::max(headroom, -v);
    }
    const SeriesOperator sop = substitute_operator(op, order + headroom);
    TruncatedSeries out = TruncatedSeries::zero(order);
    for (const auto& [key, term] : x.terms()) {
        (void)key;
        const TruncatedSeries t = collapsed_trace_series(term.rep, killed, sop);
        out += (term.coeff * t).truncated_to(order);
    }
    return out;
}

} // namespace hb
