#pragma once
#include <limits>
#include <map>
#include <string>

#include "hb/rational.hpp"

namespace hb {

// Laurent series in a formal parameter eps, exact coefficients, optionally
// truncated: terms above the order are discarded and the series remembers
// that it is a truncation. Operations propagate the tighter order.
class TruncatedSeries {
  public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : order_(order) {}
    TruncatedSeries(const Rational& c, int exp, int order = kExact) : order_(order) {
        if (c != 0 && exp <= order_) terms_[exp] = c;
    }

    static TruncatedSeries zero(int order = kExact) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order = kExact) {
        return TruncatedSeries(Rational(1), 0, order);
    }

    int order() const { return order_; }
    bool is_truncated() const { return order_ != kExact; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exp) const;
    // Smallest exponent with nonzero coefficient; kExact for the zero series.
    int valuation() const { return terms_.empty() ? kExact : terms_.begin()->first; }

    void set(int exp, const Rational& c);
    void add_term(int exp, const Rational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rational& c) const;
    TruncatedSeries shifted(int k) const; // multiply by eps^k

    TruncatedSeries truncated_to(int order) const;

    bool integer_coefficients() const;

    // Equality of coefficient data; order is evaluation metadata.
    bool operator==(const TruncatedSeries& o) const { return terms_ == o.terms_; }

    std::string str() const; // e.g. "2 + eps^2 + 1/12*eps^4"

  private:
    std::map<int, Rational> terms_;
    int order_ = kExact;
    void clamp();
};

} // namespace hb
