#pragma once
#include <map>
#include <string>

#include "hb/rational.hpp"

namespace hb {

// Sparse Laurent polynomial in one variable q over the exact rationals.
// The term map never stores zero coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c, int exp = 0) {
        if (c != 0) terms_[exp] = c;
    }
    static LaurentPoly monomial(long c, int exp) { return LaurentPoly(Rational(c), exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exp) const;
    int min_exp() const; // throws on zero polynomial
    int max_exp() const;

    // Nonzero monomial test; such elements are the invertible ones here.
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    void add_scaled(const LaurentPoly& o, const Rational& c); // *this += c*o

    // q -> q^{-1}; exact mirror symmetry.
    LaurentPoly bar() const;

    // Inverse of a monomial; throws ValidationError otherwise.
    LaurentPoly unit_inverse() const;
    // Integer power; negative powers require a monomial.
    LaurentPoly pow(int k) const;
    // Exact quotient; throws ValidationError if the division leaves a
    // remainder (divisibility is a structural guarantee where this is used).
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    bool integer_coefficients() const;

    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;                      // human form, e.g. "-q^3 + 2 - q^-1"
    std::string pair_str() const;                 // "exp:coeff,..." for files
    static LaurentPoly parse_pairs(const std::string& s);

  private:
    std::map<int, Rational> terms_;
    void trim(int exp); // drop the entry at exp if zero
};

} // namespace hb
