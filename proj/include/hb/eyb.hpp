#pragma once
#include <map>
#include <string>
#include <vector>

#include "hb/laurent.hpp"
#include "hb/report.hpp"

namespace hb {

// Column-sparse square matrix over Laurent polynomials. Stays sparse so
// tensor-space operators up to the dimension bound remain affordable.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    explicit PolyMatrix(int n) : n_(n), cols_(static_cast<std::size_t>(n)) {}
    static PolyMatrix identity(int n);

    int dim() const { return n_; }
    const std::map<int, LaurentPoly>& col(int c) const {
        return cols_[static_cast<std::size_t>(c)];
    }
    LaurentPoly entry(int r, int c) const;
    void set(int r, int c, const LaurentPoly& v);
    void add(int r, int c, const LaurentPoly& v);

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix scaled(const LaurentPoly& c) const;
    LaurentPoly trace() const;
    bool operator==(const PolyMatrix& o) const;

    std::size_t nonzeros() const;

  private:
    int n_ = 0;
    std::vector<std::map<int, LaurentPoly>> cols_;
};

// Pair operator (dim d*d) placed on tensor slots (pos, pos+1) of m slots.
// Slot 0 is the most significant digit of the basis index.
PolyMatrix embed_pair_op(const PolyMatrix& local, int d, int m, int pos);

// Enhanced R-matrix data: an invertible solution R of the braid-form
// Yang-Baxter equation on V (x) V together with a diagonal twist mu and
// scalars alpha, beta normalizing the closed-strand partial traces:
//   partial_2((I (x) mu) R)      = alpha beta I
//   partial_2((I (x) mu) R^{-1}) = alpha^{-1} beta I
// and mu (x) mu commuting with R. These conditions are exactly what the
// axioms check tests; they make the weighted trace a conjugation- and
// stabilization-invariant function of braid words.
struct EYBOperator {
    int dim = 0;
    PolyMatrix R;     // dim*dim square
    PolyMatrix Rinv;  // listed explicitly; validated against R
    std::vector<LaurentPoly> mu;
    LaurentPoly alpha;
    LaurentPoly beta;

    LaurentPoly loop_value() const; // trace of mu: value of one closed free strand
    std::string convention_id() const;
};

// The built-in 2-dimensional operator in the one-variable convention
//   R = q Id + q^{-1} U,  U the cup-cap element with U^2 = (-q^2-q^{-2}) U,
//   mu = diag(-q^2, -q^{-2}),  alpha = -q^3,  beta = 1.
// Trace values then coincide with the writhe-normalized bracket state sum
// in which every closed loop contributes -q^2-q^{-2}.
const EYBOperator& builtin_operator();

// Itemized verification of all axioms (Yang-Baxter on the triple tensor
// space, inverse, twist commutation, both partial-trace normalizations,
// invertibility of alpha and beta, exact partial-trace scalars).
Report eyb_axioms_check(const EYBOperator& op);

// Partial trace over the second factor of (I (x) mu) X for a pair operator
// X; result is dim x dim.
PolyMatrix partial_trace_second(const PolyMatrix& x, const std::vector<LaurentPoly>& mu);

// Structured text format: dim / R r c pairs / Rinv r c pairs / mu i pairs /
// alpha pairs / beta pairs, where pairs is "exp:coeff[,exp:coeff...]".
// Loading validates through eyb_axioms_check and throws on any failure;
// pass validate = false to load a structurally well-formed candidate whose
// axioms are to be judged by the axioms suite itself.
EYBOperator load_operator_file(const std::string& path, bool validate = true);
void save_operator_file(const EYBOperator& op, const std::string& path);

} // namespace hb
