#pragma once
#include <map>
#include <string>

#include "hb/braid.hpp"
#include "hb/series.hpp"
#include "hb/singular.hpp"

namespace hb {

// Element of the braid-group algebra with eps-series coefficients, the
// ambient in which band letters become divided differences
//   a_i  =  eps^{-1} (sigma_i - sigma_i^{-1}).
// Terms are keyed canonically by the Artin signature of the classical
// embedding of a representative word; the handlebody representative itself
// is retained so collapse-style traces can evaluate term by term. Since the
// embedding is injective and signatures are faithful, merging by key is
// exact group-element identification.
struct AlgebraTerm {
    BraidWord rep; // handlebody (or classical, genus 0) braid word
    TruncatedSeries coeff;
};

class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(int genus, int strands) : genus_(genus), strands_(strands) {}

    int genus() const { return genus_; }
    int strands() const { return strands_; }
    int classical_strands() const { return genus_ + strands_; }
    const std::map<ArtinSignature, AlgebraTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const BraidWord& rep, const TruncatedSeries& coeff);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const TruncatedSeries& s) const;
    AlgebraElement truncated_to(int order) const;

    bool operator==(const AlgebraElement& o) const;

    // Smallest eps-exponent over all coefficients (kExact sentinel if zero).
    int valuation() const;
    // Sum of all coefficients (image under "every braid word -> 1").
    TruncatedSeries augmentation() const;

    std::string str() const;

  private:
    int genus_ = 0;
    int strands_ = 1;
    std::map<ArtinSignature, AlgebraTerm> terms_;

    void check_ambient(const AlgebraElement& o) const;
};

// Distribute every band letter of a monoid word over its two resolutions:
//   a_i -> eps^{-1} sigma_i  -  eps^{-1} sigma_i^{-1},
// free-reduce and merge canonically. Rejects words with more band letters
// than the distribution limit. The parallel kernel and the serial reference
// produce identical elements; expand() dispatches to the parallel one.
AlgebraElement expand(const SingularWord& w);
AlgebraElement expand_reference(const SingularWord& w);
AlgebraElement expand_parallel(const SingularWord& w);

// Braid word as a one-term element with coefficient 1.
AlgebraElement algebra_of_braid(const BraidWord& w);

// Verifies sigma_i - sigma_i^{-1} = eps * expand(a_i) at the element level
// on m strands, optionally under a truncation order.
bool skein_check(int i, int m, int order = TruncatedSeries::kExact);

} // namespace hb
