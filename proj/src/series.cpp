#include "hb/series.hpp"

#include <algorithm>
#include <sstream>

namespace hb {

Rational TruncatedSeries::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::clamp() {
    while (!terms_.empty() && terms_.rbegin()->first > order_)
        terms_.erase(std::prev(terms_.end()));
}

void TruncatedSeries::set(int exp, const Rational& c) {
    if (exp > order_ || c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

void TruncatedSeries::add_term(int exp, const Rational& c) {
    if (exp > order_ || c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    order_ = std::min(order_, o.order_);
    clamp();
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    order_ = std::min(order_, o.order_);
    clamp();
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    // Sharp order propagation: with a = A + O(eps^{Na+1}) and
    // b = B + O(eps^{Nb+1}), the product is known to
    // min(val(A) + Nb, Na + val(B), Na + Nb + 1); exact factors impose no
    // bound. This matters when one factor has negative valuation.
    const long long inf = std::numeric_limits<long long>::max();
    long long bound = inf;
    if (o.order_ != kExact && !terms_.empty())
        bound = std::min(bound, static_cast<long long>(terms_.begin()->first) + o.order_);
    if (order_ != kExact && !o.terms_.empty())
        bound = std::min(bound, static_cast<long long>(order_) + o.terms_.begin()->first);
    if (order_ != kExact && o.order_ != kExact)
        bound = std::min(bound, static_cast<long long>(order_) + o.order_ + 1);
    const int ord = bound >= kExact ? kExact : static_cast<int>(bound);
    TruncatedSeries r(ord);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(order_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    // Multiplying by eps^k shifts the known-to order along with the terms.
    TruncatedSeries r(order_ == kExact ? kExact : order_ + k);
    for (const auto& [e, c] : terms_) r.add_term(e + k, c);
    return r;
}

TruncatedSeries TruncatedSeries::truncated_to(int order) const {
    TruncatedSeries r(std::min(order_, order));
    for (const auto& [e, c] : terms_)
        if (e <= r.order_) r.terms_[e] = c;
    return r;
}

bool TruncatedSeries::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            const bool unit_coeff = (a == 1 && e != 0);
            if (!unit_coeff) os << a.get_str();
            if (e != 0) {
                if (!unit_coeff) os << "*";
                os << "eps";
                if (e != 1) os << "^" << e;
            }
        }
    }
    if (is_truncated()) os << " + O(eps^" << (order_ + 1) << ")";
    return os.str();
}

} // namespace hb
