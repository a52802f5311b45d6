#include "hb/tensor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hb/config.hpp"
#include "hb/error.hpp"
#include "hb/tensor_apply.hpp"

namespace hb {

int tensor_dim(int d, int m) {
    if (d < 2) throw ValidationError("tensor_dim: base dimension must be at least 2");
    if (m < 1) throw ValidationError("tensor_dim: need at least one strand");
    std::int64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= d;
        if (total > static_cast<std::int64_t>(limits().max_tensor_dim))
            throw ResourceError("tensor space dimension " + std::to_string(total) +
                                "+ exceeds the configured bound " +
                                std::to_string(limits().max_tensor_dim));
    }
    return static_cast<int>(total);
}

SparseVec apply_pair_local(const SparseVec& v, const PolyMatrix& local, int d, int m, int pos) {
    return apply_pair_slot(v, local, d, m, pos);
}

namespace {

void require_classical(const BraidWord& w, const char* what) {
    validate_word(w);
    if (w.genus != 0)
        throw ValidationError(std::string(what) + ": expects a word on strands only; map the handles away first");
}

// Apply one generator power to a column, right-to-left caller order.
SparseVec apply_letter(SparseVec col, const BraidLetter& l, const EYBOperator& op, int m) {
    const PolyMatrix& local = l.exp > 0 ? op.R : op.Rinv;
    const int reps = l.exp > 0 ? l.exp : -l.exp;
    for (int r = 0; r < reps; ++r) col = apply_pair_local(col, local, op.dim, m, l.index - 1);
    return col;
}

} // namespace

SparseVec rho_column(const BraidWord& w, const EYBOperator& op, int c) {
    require_classical(w, "rho_column");
    SparseVec col;
    col.emplace(c, LaurentPoly(Rational(1)));
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        col = apply_letter(std::move(col), *it, op, w.strands);
    return col;
}

PolyMatrix rho_matrix(const BraidWord& w, const EYBOperator& op) {
    require_classical(w, "rho_matrix");
    const int n = tensor_dim(op.dim, w.strands);
    PolyMatrix out(n);
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n; ++c) {
        SparseVec col = rho_column(w, op, c);
        for (const auto& [r, v] : col) out.set(r, c, v); // column c touched by one thread only
    }
    return out;
}

LaurentPoly mu_weight(int v, int m, const EYBOperator& op) {
    LaurentPoly w = LaurentPoly(Rational(1));
    int x = v;
    for (int s = 0; s < m; ++s) {
        w = w * op.mu[static_cast<std::size_t>(x % op.dim)];
        x /= op.dim;
    }
    return w;
}

LaurentPoly weighted_trace(const BraidWord& w, const EYBOperator& op) {
    require_classical(w, "weighted_trace");
    const int n = tensor_dim(op.dim, w.strands);
    int nthreads = 1;
#ifdef _OPENMP
    nthreads = omp_get_max_threads();
#endif
    std::vector<LaurentPoly> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < n; ++c) {
        SparseVec col = rho_column(w, op, c);
        auto it = col.find(c);
        if (it == col.end()) continue;
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        partial[static_cast<std::size_t>(tid)] =
            partial[static_cast<std::size_t>(tid)] + it->second * mu_weight(c, w.strands, op);
    }
    LaurentPoly total;
    for (const auto& p : partial) total = total + p;
    return total;
}

namespace {

using DenseMatrix = std::vector<LaurentPoly>; // row-major n*n

DenseMatrix dense_identity(int n) {
    DenseMatrix m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = LaurentPoly(Rational(1));
    return m;
}

DenseMatrix dense_of(const PolyMatrix& s) {
    const int n = s.dim();
    DenseMatrix m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        for (const auto& [r, v] : s.col(c)) m[static_cast<std::size_t>(r) * n + c] = v;
    return m;
}

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b, int n) {
    DenseMatrix out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const LaurentPoly& aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const LaurentPoly& bkj = b[static_cast<std::size_t>(k) * n + j];
                if (bkj.is_zero()) continue;
                auto& o = out[static_cast<std::size_t>(i) * n + j];
                o = o + aik * bkj;
            }
        }
    return out;
}

} // namespace

LaurentPoly weighted_trace_reference(const BraidWord& w, const EYBOperator& op) {
    require_classical(w, "weighted_trace_reference");
    const int n = tensor_dim(op.dim, w.strands);
    DenseMatrix acc = dense_identity(n);
    for (const auto& l : w.letters) {
        const PolyMatrix& local = l.exp > 0 ? op.R : op.Rinv;
        const DenseMatrix step = dense_of(embed_pair_op(local, op.dim, w.strands, l.index - 1));
        const int reps = l.exp > 0 ? l.exp : -l.exp;
        for (int r = 0; r < reps; ++r) acc = dense_mul(acc, step, n);
    }
    LaurentPoly total;
    for (int v = 0; v < n; ++v)
        total = total + acc[static_cast<std::size_t>(v) * n + v] * mu_weight(v, w.strands, op);
    return total;
}

PolyMatrix singular_matrix(const SingularWord& w, const EYBOperator& op) {
    validate_singular(w);
    if (w.genus != 0)
        throw ValidationError("singular_matrix: expects a word on strands only");
    const int n = tensor_dim(op.dim, w.strands);
    const PolyMatrix band_local = op.R - op.Rinv;
    PolyMatrix acc = PolyMatrix::identity(n);
    for (const auto& l : w.letters) {
        const PolyMatrix* local = nullptr;
        switch (l.kind) {
            case SGen::Sigma: local = (l.exp > 0) ? &op.R : &op.Rinv; break;
            case SGen::A: local = &band_local; break;
            case SGen::Tau: throw ValidationError("singular_matrix: expects a word on strands only");
        }
        const PolyMatrix step = embed_pair_op(*local, op.dim, w.strands, l.index - 1);
        const int reps = l.exp > 0 ? l.exp : -l.exp;
        for (int r = 0; r < reps; ++r) acc = acc * step;
    }
    return acc;
}

} // namespace hb
