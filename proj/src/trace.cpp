#include "hb/trace.hpp"

#include <random>
#include <sstream>

#include "hb/error.hpp"
#include "hb/tensor.hpp"

namespace hb {

LaurentPoly TraceValue::coeff(int eps_exp) const {
    auto it = parts.find(eps_exp);
    return it == parts.end() ? LaurentPoly() : it->second;
}

int TraceValue::valuation() const {
    return parts.empty() ? TruncatedSeries::kExact : parts.begin()->first;
}

void TraceValue::add_part(int eps_exp, const LaurentPoly& p) {
    if (p.is_zero() || eps_exp > order) return;
    auto it = parts.find(eps_exp);
    if (it == parts.end()) {
        parts.emplace(eps_exp, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) parts.erase(it);
    }
}

TraceValue TraceValue::operator+(const TraceValue& o) const {
    TraceValue out = *this;
    out.order = std::min(order, o.order);
    for (const auto& [e, p] : o.parts) out.add_part(e, p);
    // re-clamp in case our own parts exceed the tighter order
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = (it->first > out.order) ? out.parts.erase(it) : std::next(it);
    return out;
}

TraceValue TraceValue::operator-(const TraceValue& o) const {
    TraceValue neg = o;
    for (auto& [e, p] : neg.parts) p = -p;
    return *this + neg;
}

TraceValue TraceValue::scaled(const LaurentPoly& c) const {
    TraceValue out;
    out.order = order;
    if (c.is_zero()) return out;
    for (const auto& [e, p] : parts) out.parts.emplace(e, p * c);
    return out;
}

std::string TraceValue::str() const {
    if (parts.empty()) return order == TruncatedSeries::kExact ? "0" : "O(eps^" + std::to_string(order + 1) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, p] : parts) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (e != 0) os << "*eps^" << e;
    }
    if (order != TruncatedSeries::kExact) os << " + O(eps^" << order + 1 << ")";
    return os.str();
}

LaurentPoly markov_trace(const BraidWord& w, const EYBOperator& op) {
    validate_word(w);
    if (w.genus != 0)
        throw ValidationError("markov_trace: expects a word on strands only; collapse or embed handles first");
    const LaurentPoly wt = weighted_trace(w, op);
    const int e = writhe(w);
    const LaurentPoly alpha_part = (e >= 0 ? op.alpha.unit_inverse() : op.alpha).pow(e >= 0 ? e : -e);
    const LaurentPoly beta_part = op.beta.unit_inverse().pow(w.strands);
    // Reduce by the value of one closed strand so the 1-strand identity maps
    // to exactly 1. Every closure carries at least one loop factor, so this
    // division is exact; a failed division indicates an operator for which
    // this normalization does not exist and is reported, not approximated.
    const LaurentPoly loop = op.loop_value() * op.beta.unit_inverse();
    return (wt * alpha_part * beta_part).div_exact(loop);
}

BraidWord collapse_handles(const BraidWord& w, int killed) {
    validate_word(w);
    if (killed < 0 || killed > w.genus)
        throw ValidationError("collapse_handles: count must lie between 0 and the genus");
    BraidWord out;
    out.genus = w.genus - killed;
    out.strands = w.strands;
    for (const auto& l : w.letters) {
        if (l.kind == Gen::Tau) {
            if (l.index <= killed) continue;
            out.letters.push_back(tau(l.index - killed, l.exp));
        } else {
            out.letters.push_back(l);
        }
    }
    return free_reduce(out);
}

LaurentPoly collapsed_trace(const BraidWord& w, int killed, const EYBOperator& op) {
    return markov_trace(embed_handlebody(collapse_handles(w, killed)), op);
}

TraceValue trace_of_element(const AlgebraElement& e, int killed, const EYBOperator& op) {
    TraceValue out;
    for (const auto& [key, term] : e.terms()) {
        (void)key;
        const LaurentPoly t = collapsed_trace(term.rep, killed, op);
        out.order = std::min(out.order, term.coeff.order());
        for (const auto& [exp, c] : term.coeff.terms()) {
            LaurentPoly scaled;
            scaled.add_scaled(t, c);
            out.add_part(exp, scaled);
        }
    }
    for (auto it = out.parts.begin(); it != out.parts.end();)
        it = (it->first > out.order) ? out.parts.erase(it) : std::next(it);
    return out;
}

BraidWord random_handlebody_word(int genus, int strands, int length, std::uint32_t seed) {
    if (genus < 0 || strands < 1) throw ValidationError("random_handlebody_word: bad shape");
    std::mt19937 rng(seed);
    const int kinds = (strands - 1) + genus; // sigma indices + tau indices
    if (kinds == 0) return BraidWord{genus, strands, {}};
    std::uniform_int_distribution<int> pick(0, kinds - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    BraidWord w{genus, strands, {}};
    for (int i = 0; i < length; ++i) {
        const int k = pick(rng);
        const int e = sign(rng) ? 1 : -1;
        if (k < strands - 1)
            w.letters.push_back(sigma(k + 1, e));
        else
            w.letters.push_back(tau(k - (strands - 1) + 1, e));
    }
    return w;
}

Report markov_trace_suite(const EYBOperator& op, int words_per_case, std::uint32_t seed) {
    Report rep("markov");
    struct Case {
        int genus, strands;
    };
    const Case cases[] = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}};
    std::uint32_t s = seed;
    for (const auto& c : cases) {
        for (int t = 0; t < words_per_case; ++t) {
            const BraidWord w = random_handlebody_word(c.genus, c.strands, 6, s++);
            const BraidWord u = random_handlebody_word(c.genus, c.strands, 4, s++);
            BraidWord conj = u;
            conj.letters.insert(conj.letters.end(), w.letters.begin(), w.letters.end());
            const BraidWord uinv = invert_word(u);
            conj.letters.insert(conj.letters.end(), uinv.letters.begin(), uinv.letters.end());

            BraidWord stab_pos = w, stab_neg = w;
            stab_pos.strands = w.strands + 1;
            stab_pos.letters.push_back(sigma(w.strands, 1));
            stab_neg.strands = w.strands + 1;
            stab_neg.letters.push_back(sigma(w.strands, -1));

            for (int killed = 0; killed <= c.genus; ++killed) {
                const LaurentPoly base = collapsed_trace(w, killed, op);
                const std::string tag = "g=" + std::to_string(c.genus) + " n=" + std::to_string(c.strands) +
                                        " word " + std::to_string(t) + " killed=" + std::to_string(killed);
                rep.add("conjugation invariance, " + tag, collapsed_trace(conj, killed, op) == base);
                rep.add("positive stabilization, " + tag, collapsed_trace(stab_pos, killed, op) == base);
                rep.add("negative stabilization, " + tag, collapsed_trace(stab_neg, killed, op) == base);
            }
        }
    }
    return rep;
}

} // namespace hb
