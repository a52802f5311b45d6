#include "hb/substitute.hpp"

#include "hb/error.hpp"

namespace hb {

TruncatedSeries exp_substitute(const LaurentPoly& p, int order) {
    if (order == TruncatedSeries::kExact)
        throw ValidationError("exp_substitute: a finite truncation order is required");
    TruncatedSeries out(order);
    for (const auto& [k, c] : p.terms()) {
        // c * exp(k*eps) = c * sum_j (k*eps)^j / j!
        Rational term(c); // j = 0
        out.add_term(0, term);
        for (int j = 1; j <= order; ++j) {
            term *= Rational(k) / Rational(j);
            out.add_term(j, term);
        }
    }
    return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s, int order) {
    if (order == TruncatedSeries::kExact)
        throw ValidationError("series_reciprocal: a finite truncation order is required");
    const int n = std::min(order, s.order());
    const Rational a0 = s.coeff(0);
    if (s.valuation() != 0 || a0 == 0)
        throw ValidationError("series_reciprocal: constant term must be nonzero and no lower terms present");
    TruncatedSeries out(n);
    out.add_term(0, Rational(1) / a0);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += s.coeff(j) * out.coeff(k - j);
        if (acc != 0) out.add_term(k, -acc / a0);
    }
    return out;
}

} // namespace hb
