#pragma once
#include <gmpxx.h>

#include <string>

#include "hb/error.hpp"

namespace hb {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) as long as canonicalize() runs after raw construction.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw ValidationError("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p" or "p/q", for JSON output and operator files.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ValidationError("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0) throw ValidationError("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

} // namespace hb
