#include "hb/laurent.hpp"

#include <sstream>

#include "hb/error.hpp"

namespace hb {

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw ValidationError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw ValidationError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::trim(int exp) {
    auto it = terms_.find(exp);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] += c;
        trim(e);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] -= c;
        trim(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            r.terms_[e1 + e2] += c1 * c2;
            r.trim(e1 + e2);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rational& c) {
    if (c == 0) return;
    for (const auto& [e, oc] : o.terms_) {
        terms_[e] += c * oc;
        trim(e);
    }
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_monomial()) throw ValidationError("unit_inverse: not a monomial");
    const auto& [e, c] = *terms_.begin();
    return LaurentPoly(Rational(1) / c, -e);
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k == 0) return LaurentPoly(Rational(1));
    LaurentPoly base = k > 0 ? *this : unit_inverse();
    int n = k > 0 ? k : -k;
    LaurentPoly r(Rational(1));
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw ValidationError("div_exact: division by zero");
    if (is_zero()) return LaurentPoly();
    // Divisibility in the Laurent ring reduces to ordinary polynomial
    // division after factoring out the minimal powers (units).
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const Rational dc = divisor.coeff(dlead);
    // An exact quotient s of p satisfies min_exp(s) = min_exp(p) - min_exp(d);
    // top-down cancellation whose exponent would drop below that bound means
    // the division has a remainder. Each step strictly lowers rem's top
    // exponent, so the loop terminates.
    const int min_quot_exp = min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        const int e = rem.max_exp() - dlead;
        if (e < min_quot_exp) throw ValidationError("div_exact: remainder is nonzero");
        const LaurentPoly t(rem.coeff(rem.max_exp()) / dc, e);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
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
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string LaurentPoly::pair_str() const {
    if (terms_.empty()) return "0:0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += ',';
        s += std::to_string(e) + ":" + c.get_str();
    }
    return s;
}

LaurentPoly LaurentPoly::parse_pairs(const std::string& s) {
    LaurentPoly r;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ValidationError("polynomial term '" + item + "': expected exp:coeff");
        int e;
        try {
            e = std::stoi(item.substr(0, colon));
        } catch (...) {
            throw ValidationError("polynomial term '" + item + "': bad exponent");
        }
        Rational c = parse_rational(item.substr(colon + 1));
        r.terms_[e] += c;
        r.trim(e);
    }
    return r;
}

} // namespace hb
