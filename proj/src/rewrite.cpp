#include "hb/rewrite.hpp"

#include <algorithm>
#include <map>

#include "hb/config.hpp"
#include "hb/error.hpp"

namespace hb {

std::vector<RewriteRule> singular_rules(int m) {
    if (m < 1) throw ValidationError("singular_rules: bad strand count");
    std::vector<RewriteRule> rules;
    auto idx = [](int i) { return std::to_string(i); };
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i + 2; j <= m - 1; ++j)
            rules.push_back({"commute s" + idx(i) + " s" + idx(j),
                             {ssigma(i), ssigma(j)},
                             {ssigma(j), ssigma(i)}});
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i + 2; j <= m - 1; ++j)
            rules.push_back({"commute a" + idx(i) + " a" + idx(j),
                             {sband(i), sband(j)},
                             {sband(j), sband(i)}});
    for (int i = 1; i <= m - 1; ++i)
        for (int j = 1; j <= m - 1; ++j) {
            if (std::abs(i - j) == 1) continue;
            rules.push_back({"commute a" + idx(i) + " s" + idx(j),
                             {sband(i), ssigma(j)},
                             {ssigma(j), sband(i)}});
        }
    for (int i = 1; i <= m - 2; ++i)
        rules.push_back({"braid s" + idx(i),
                         {ssigma(i), ssigma(i + 1), ssigma(i)},
                         {ssigma(i + 1), ssigma(i), ssigma(i + 1)}});
    for (int i = 1; i <= m - 2; ++i)
        rules.push_back({"band slide up a" + idx(i),
                         {ssigma(i), ssigma(i + 1), sband(i)},
                         {sband(i + 1), ssigma(i), ssigma(i + 1)}});
    for (int i = 1; i <= m - 2; ++i)
        rules.push_back({"band slide down a" + idx(i + 1),
                         {ssigma(i + 1), ssigma(i), sband(i + 1)},
                         {sband(i), ssigma(i + 1), ssigma(i)}});
    for (int i = 1; i <= m - 1; ++i) {
        rules.push_back({"cancel s" + idx(i), {ssigma(i), ssigma(i, -1)}, {}});
        rules.push_back({"cancel s" + idx(i) + "^-1", {ssigma(i, -1), ssigma(i)}, {}});
    }
    return rules;
}

namespace {

bool matches(const std::vector<SingularLetter>& w, std::size_t pos,
             const std::vector<SingularLetter>& pat) {
    if (pos + pat.size() > w.size()) return false;
    for (std::size_t k = 0; k < pat.size(); ++k)
        if (!(w[pos + k] == pat[k])) return false;
    return true;
}

std::vector<SingularLetter> splice(const std::vector<SingularLetter>& w, std::size_t pos,
                                   std::size_t cut, const std::vector<SingularLetter>& repl) {
    std::vector<SingularLetter> out;
    out.reserve(w.size() - cut + repl.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + cut), w.end());
    return out;
}

// Dense integer encoding so words can key a map.
using Key = std::vector<int>;

Key encode(const std::vector<SingularLetter>& w) {
    Key k;
    k.reserve(w.size());
    for (const auto& l : w) {
        int v = l.index * 4;
        if (l.kind == SGen::A)
            v += 2;
        else if (l.exp < 0)
            v += 1;
        k.push_back(v);
    }
    return k;
}

struct NodeInfo {
    Key parent;
    RewriteStep step; // step applied at the parent to reach this node
    int depth = 0;
};

struct Side {
    std::map<Key, NodeInfo> visited;
    std::vector<Key> frontier;
    int depth = 0;
};

std::vector<RewriteStep> trail_to_root(const std::map<Key, NodeInfo>& visited, Key at) {
    std::vector<RewriteStep> steps;
    for (;;) {
        const NodeInfo& info = visited.at(at);
        if (info.depth == 0) break;
        steps.push_back(info.step);
        at = info.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

} // namespace

SingularWord apply_step(const SingularWord& w, const std::vector<RewriteRule>& rules,
                        const RewriteStep& s) {
    if (s.rule >= rules.size()) throw ValidationError("apply_step: rule index out of range");
    const RewriteRule& r = rules[s.rule];
    const auto& from = s.forward ? r.lhs : r.rhs;
    const auto& to = s.forward ? r.rhs : r.lhs;
    if (s.pos > w.letters.size() || !matches(w.letters, s.pos, from))
        throw ValidationError("apply_step: rule '" + r.name + "' does not match at position " +
                              std::to_string(s.pos));
    SingularWord out = w;
    out.letters = splice(w.letters, s.pos, from.size(), to);
    return out;
}

Derivation rewrite_derivation(const SingularWord& u, const SingularWord& v, int depth) {
    if (u.genus != 0 || v.genus != 0)
        throw ValidationError("rewrite_derivation: classical ambient required (embed first)");
    if (u.strands != v.strands) throw ValidationError("rewrite_derivation: ambient mismatch");
    validate_singular(u);
    validate_singular(v);
    if (depth < 0) throw ValidationError("rewrite_derivation: negative depth");

    const int m = u.strands;
    const std::vector<RewriteRule> rules = singular_rules(m);
    const std::size_t cap = limits().max_search_states;

    Derivation result;
    Key ku = encode(u.letters), kv = encode(v.letters);
    if (ku == kv) {
        result.found = true;
        return result;
    }

    // side[0] grows from u with forward-oriented trails, side[1] from v;
    // trails from v are replayed backwards with directions flipped.
    Side side[2];
    side[0].visited.emplace(ku, NodeInfo{{}, {}, 0});
    side[0].frontier.push_back(ku);
    side[1].visited.emplace(kv, NodeInfo{{}, {}, 0});
    side[1].frontier.push_back(kv);

    auto splice_paths = [&](int grew, const Key& meet, const RewriteStep& step, const Key& parent) {
        // Path u -> parent-chain -> meet on side `grew`, then meet -> v.
        std::vector<RewriteStep> a, b;
        if (grew == 0) {
            a = trail_to_root(side[0].visited, parent);
            a.push_back(step);
            b = trail_to_root(side[1].visited, meet);
        } else {
            a = trail_to_root(side[0].visited, meet);
            b = trail_to_root(side[1].visited, parent);
            b.push_back(step);
        }
        // b runs v -> meet; reverse and flip to go meet -> v. Positions are
        // preserved: applying a rule forward at pos is undone by applying it
        // backward at the same pos.
        std::reverse(b.begin(), b.end());
        for (RewriteStep& s : b) s.forward = !s.forward;
        result.steps = std::move(a);
        result.steps.insert(result.steps.end(), b.begin(), b.end());
        result.found = true;
    };

    while (side[0].depth + side[1].depth < depth) {
        const int g = (side[0].frontier.size() <= side[1].frontier.size() &&
                       !side[0].frontier.empty()) ||
                              side[1].frontier.empty()
                          ? 0
                          : 1;
        Side& grow = side[g];
        Side& other = side[1 - g];
        if (grow.frontier.empty()) break;
        ++grow.depth;
        std::vector<Key> next;
        for (const Key& cur : grow.frontier) {
            // Reconstruct letters from the key.
            std::vector<SingularLetter> w;
            w.reserve(cur.size());
            for (int v4 : cur) {
                int index = v4 / 4, tag = v4 % 4;
                w.push_back(tag == 2 ? sband(index) : ssigma(index, tag == 1 ? -1 : 1));
            }
            for (std::size_t ri = 0; ri < rules.size(); ++ri) {
                const RewriteRule& r = rules[ri];
                for (int dir = 0; dir < 2; ++dir) {
                    const auto& from = dir == 0 ? r.lhs : r.rhs;
                    const auto& to = dir == 0 ? r.rhs : r.lhs;
                    if (from.size() > w.size()) continue;
                    // Empty patterns (reverse of a cancellation) insert at
                    // any of the w.size()+1 gaps.
                    const std::size_t last_pos = w.size() - from.size();
                    for (std::size_t pos = 0; pos <= last_pos; ++pos) {
                        if (!matches(w, pos, from)) continue;
                        Key nk = encode(splice(w, pos, from.size(), to));
                        RewriteStep step{ri, pos, dir == 0};
                        if (auto hit = other.visited.find(nk); hit != other.visited.end()) {
                            result.explored = side[0].visited.size() + side[1].visited.size();
                            splice_paths(g, nk, step, cur);
                            return result;
                        }
                        if (grow.visited.size() >= cap) {
                            result.capped = true;
                            result.explored = side[0].visited.size() + side[1].visited.size();
                            return result;
                        }
                        if (grow.visited.emplace(nk, NodeInfo{cur, step, grow.depth}).second)
                            next.push_back(std::move(nk));
                    }
                }
            }
        }
        grow.frontier = std::move(next);
    }
    result.explored = side[0].visited.size() + side[1].visited.size();
    return result;
}

} // namespace hb
