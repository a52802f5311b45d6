#pragma once
#include <map>
#include <vector>

#include "hb/braid.hpp"
#include "hb/eyb.hpp"
#include "hb/singular.hpp"

namespace hb {

// Sparse vector in the m-fold tensor power of the operator's base space.
using SparseVec = std::map<int, LaurentPoly>;

// Apply a pair operator (dim d*d) on slots (pos, pos+1) of m slots.
SparseVec apply_pair_local(const SparseVec& v, const PolyMatrix& local, int d, int m, int pos);

// Column rho(w) e_c of the representation matrix of a classical braid word
// (no handle generators): sigma_i acts as R on slots (i-1, i), its inverse
// as Rinv. Letters are applied right to left.
SparseVec rho_column(const BraidWord& w, const EYBOperator& op, int c);

// Full representation matrix, columns computed independently (parallel).
PolyMatrix rho_matrix(const BraidWord& w, const EYBOperator& op);

// Product of mu entries over the digits of basis index v.
LaurentPoly mu_weight(int v, int m, const EYBOperator& op);

// Weighted trace  sum_v mu_weight(v) (rho(w) e_v)[v].
// The production kernel walks sparse columns in parallel; the reference
// builds the dense representation matrix by dense multiplication and sums
// its weighted diagonal. Both must agree on every input.
LaurentPoly weighted_trace(const BraidWord& w, const EYBOperator& op);
LaurentPoly weighted_trace_reference(const BraidWord& w, const EYBOperator& op);

// Matrix of a classical singular word: bands act as R - Rinv on their pair
// of slots. Used to check the defining relations at the matrix level.
PolyMatrix singular_matrix(const SingularWord& w, const EYBOperator& op);

// d^m with the configured resource bound enforced.
int tensor_dim(int d, int m);

} // namespace hb
