#pragma once
#include "hb/laurent.hpp"
#include "hb/series.hpp"

namespace hb {

// Substitute q = exp(eps): each q^k becomes the Taylor series of exp(k*eps)
// truncated at eps^order. Exact rational coefficients; order must be finite
// (the image of a nonconstant polynomial is an infinite series).
TruncatedSeries exp_substitute(const LaurentPoly& p, int order);

// Multiplicative inverse of a series with invertible constant term, to the
// series' own order (or `order` if tighter).
TruncatedSeries series_reciprocal(const TruncatedSeries& s, int order);

} // namespace hb
