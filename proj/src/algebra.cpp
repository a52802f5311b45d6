#include "hb/algebra.hpp"

#include <omp.h>

#include <cstdint>

#include "hb/config.hpp"
#include "hb/error.hpp"

namespace hb {

void AlgebraElement::check_ambient(const AlgebraElement& o) const {
    if (genus_ != o.genus_ || strands_ != o.strands_)
        throw ValidationError("algebra: ambient mismatch");
}

void AlgebraElement::add_term(const BraidWord& rep, const TruncatedSeries& coeff) {
    if (rep.genus != genus_ || rep.strands != strands_)
        throw ValidationError("algebra: term ambient mismatch");
    if (coeff.is_zero()) return;
    BraidWord red = free_reduce(rep);
    ArtinSignature key = artin_signature(embed_handlebody(red));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), AlgebraTerm{std::move(red), coeff});
    } else {
        it->second.coeff += coeff;
        if (it->second.coeff.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_ambient(o);
    AlgebraElement r = *this;
    for (const auto& [k, t] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, t);
        } else {
            it->second.coeff += t.coeff;
            if (it->second.coeff.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_ambient(o);
    AlgebraElement r = *this;
    for (const auto& [k, t] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            AlgebraTerm neg = t;
            neg.coeff = -t.coeff;
            r.terms_.emplace(k, std::move(neg));
        } else {
            it->second.coeff -= t.coeff;
            if (it->second.coeff.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_ambient(o);
    AlgebraElement r(genus_, strands_);
    for (const auto& [ka, ta] : terms_)
        for (const auto& [kb, tb] : o.terms_) {
            BraidWord w = ta.rep;
            w.letters.insert(w.letters.end(), tb.rep.letters.begin(), tb.rep.letters.end());
            r.add_term(w, ta.coeff * tb.coeff);
        }
    return r;
}

AlgebraElement AlgebraElement::scaled(const TruncatedSeries& s) const {
    AlgebraElement r(genus_, strands_);
    if (s.is_zero()) return r;
    for (const auto& [k, t] : terms_) {
        TruncatedSeries c = t.coeff * s;
        if (!c.is_zero()) r.terms_.emplace(k, AlgebraTerm{t.rep, std::move(c)});
    }
    return r;
}

AlgebraElement AlgebraElement::truncated_to(int order) const {
    AlgebraElement r(genus_, strands_);
    for (const auto& [k, t] : terms_) {
        TruncatedSeries c = t.coeff.truncated_to(order);
        if (!c.is_zero()) r.terms_.emplace(k, AlgebraTerm{t.rep, std::move(c)});
    }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (genus_ != o.genus_ || strands_ != o.strands_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first)) return false;
        if (!(it->second.coeff == jt->second.coeff)) return false;
    }
    return true;
}

int AlgebraElement::valuation() const {
    int v = TruncatedSeries::kExact;
    for (const auto& [k, t] : terms_) v = std::min(v, t.coeff.valuation());
    return v;
}

TruncatedSeries AlgebraElement::augmentation() const {
    TruncatedSeries s;
    for (const auto& [k, t] : terms_) s += t.coeff;
    return s;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, t] : terms_) {
        if (!s.empty()) s += "  +  ";
        s += "(" + t.coeff.str() + ") [" + word_str(t.rep) + "]";
    }
    return s;
}

namespace {

struct ExpandPlan {
    BraidWord base;                  // band letters replaced by placeholders in `slots`
    std::vector<std::size_t> slots;  // positions in base.letters holding band sites
    int bands = 0;
};

ExpandPlan plan_expansion(const SingularWord& w) {
    validate_singular(w);
    ExpandPlan p;
    p.base = BraidWord{w.genus, w.strands, {}};
    for (const auto& l : w.letters) {
        switch (l.kind) {
            case SGen::Sigma:
                p.base.letters.push_back(sigma(l.index, l.exp));
                break;
            case SGen::Tau:
                p.base.letters.push_back(tau(l.index, l.exp));
                break;
            case SGen::A:
                p.slots.push_back(p.base.letters.size());
                p.base.letters.push_back(sigma(l.index, 1));
                ++p.bands;
                break;
        }
    }
    if (static_cast<std::size_t>(p.bands) > limits().max_singular)
        throw ResourceError("expand: " + std::to_string(p.bands) +
                            " band letters exceed the distribution limit (HB_MAX_SINGULAR)");
    return p;
}

// Resolve one sign choice: bit b of mask picks sigma (0) or sigma^{-1} (1)
// at band site b. Coefficient is (-1)^{popcount} eps^{-bands}.
void add_resolution(AlgebraElement& acc, const ExpandPlan& p, std::uint64_t mask) {
    BraidWord w = p.base;
    int sign = 1;
    for (std::size_t b = 0; b < p.slots.size(); ++b)
        if (mask >> b & 1) {
            w.letters[p.slots[b]].exp = -1;
            sign = -sign;
        }
    acc.add_term(w, TruncatedSeries(Rational(sign), -p.bands));
}

} // namespace

AlgebraElement expand_reference(const SingularWord& w) {
    ExpandPlan p = plan_expansion(w);
    AlgebraElement acc(w.genus, w.strands);
    const std::uint64_t n = std::uint64_t{1} << p.bands;
    for (std::uint64_t mask = 0; mask < n; ++mask) add_resolution(acc, p, mask);
    return acc;
}

AlgebraElement expand_parallel(const SingularWord& w) {
    ExpandPlan p = plan_expansion(w);
    const std::uint64_t n = std::uint64_t{1} << p.bands;
    const int nt = std::max(1, omp_get_max_threads());
    std::vector<AlgebraElement> part(static_cast<std::size_t>(nt),
                                     AlgebraElement(w.genus, w.strands));
#pragma omp parallel num_threads(nt)
    {
        AlgebraElement& mine = part[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(n); ++mask)
            add_resolution(mine, p, static_cast<std::uint64_t>(mask));
    }
    // Exact coefficients: addition order cannot change the result; merge in
    // thread order anyway so the procedure is visibly deterministic.
    AlgebraElement acc(w.genus, w.strands);
    for (const AlgebraElement& e : part) acc = acc + e;
    return acc;
}

AlgebraElement expand(const SingularWord& w) { return expand_parallel(w); }

AlgebraElement algebra_of_braid(const BraidWord& w) {
    validate_word(w);
    AlgebraElement e(w.genus, w.strands);
    e.add_term(w, TruncatedSeries::one());
    return e;
}

bool skein_check(int i, int m, int order) {
    BraidWord pos{0, m, {sigma(i)}};
    BraidWord neg{0, m, {sigma(i, -1)}};
    validate_word(pos);
    AlgebraElement lhs(0, m);
    lhs.add_term(pos, TruncatedSeries::one());
    lhs.add_term(neg, -TruncatedSeries::one());
    // Scale exactly by eps, then truncate both sides to the requested order.
    AlgebraElement rhs =
        expand(SingularWord{0, m, {sband(i)}}).scaled(TruncatedSeries(Rational(1), 1));
    return lhs.truncated_to(order) == rhs.truncated_to(order);
}

} // namespace hb
