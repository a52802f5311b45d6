#include "hb/wordio.hpp"

#include "json.hpp"
#include <numeric>
#include <sstream>
#include <vector>

#include "hb/error.hpp"

namespace hb {

namespace {

struct Token {
    char kind;   // 's', 't', or 'a'
    int index;
    int exp;
    int pos; // 1-based position in the word text, for error messages
};

std::vector<Token> tokenize(const std::string& text, bool allow_singular) {
    std::vector<Token> out;
    std::istringstream is(text);
    std::string tok;
    int pos = 0;
    while (is >> tok) {
        ++pos;
        const std::string where = "token " + std::to_string(pos) + " '" + tok + "': ";
        if (tok == "e") continue; // the empty word
        const char kind = tok[0];
        if (kind != 's' && kind != 't' && kind != 'a')
            throw ValidationError(where + "expected s<i>, t<k>, or a<i>");
        if (kind == 'a' && !allow_singular)
            throw ValidationError(where + "double-point letters are not accepted here");
        std::size_t p = 1;
        if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
            throw ValidationError(where + "missing index");
        int index = 0;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
            index = index * 10 + (tok[p] - '0');
            if (index > 1000000) throw ValidationError(where + "index out of range");
            ++p;
        }
        if (index < 1) throw ValidationError(where + "index must be positive");
        int exp = 1;
        if (p < tok.size()) {
            if (tok[p] != '^') throw ValidationError(where + "unexpected character '" + tok[p] + "'");
            ++p;
            bool neg = false;
            if (p < tok.size() && (tok[p] == '-' || tok[p] == '+')) {
                neg = tok[p] == '-';
                ++p;
            }
            if (p >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[p])))
                throw ValidationError(where + "missing exponent after '^'");
            long v = 0;
            while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
                v = v * 10 + (tok[p] - '0');
                if (v > 1000000) throw ValidationError(where + "exponent out of range");
                ++p;
            }
            if (p != tok.size()) throw ValidationError(where + "trailing characters");
            exp = static_cast<int>(neg ? -v : v);
        }
        if (kind == 'a' && exp < 0)
            throw ValidationError(where + "double-point letters admit no inverses");
        out.push_back({kind, index, exp, pos});
    }
    return out;
}

void check_index(const Token& t, int genus, int strands) {
    const std::string where = "token " + std::to_string(t.pos) + " '" + std::string(1, t.kind) +
                              std::to_string(t.index) + "': ";
    if (t.kind == 't') {
        if (t.index > genus)
            throw ValidationError(where + "index exceeds the genus " + std::to_string(genus));
    } else {
        if (t.index > strands - 1)
            throw ValidationError(where + "index exceeds strand count " +
                                  std::to_string(strands) + " minus one");
    }
}

} // namespace

BraidWord parse_braid_word(const std::string& text, int genus, int strands) {
    if (genus < 0 || strands < 1) throw ValidationError("parse: bad genus or strand count");
    BraidWord w{genus, strands, {}};
    for (const Token& t : tokenize(text, false)) {
        check_index(t, genus, strands);
        const int sgn = t.exp < 0 ? -1 : 1;
        const int reps = t.exp < 0 ? -t.exp : t.exp;
        for (int r = 0; r < reps; ++r)
            w.letters.push_back(t.kind == 's' ? sigma(t.index, sgn) : tau(t.index, sgn));
    }
    validate_word(w);
    return w;
}

SingularWord parse_singular_word(const std::string& text, int genus, int strands) {
    if (genus < 0 || strands < 1) throw ValidationError("parse: bad genus or strand count");
    SingularWord w{genus, strands, {}};
    for (const Token& t : tokenize(text, true)) {
        check_index(t, genus, strands);
        const int sgn = t.exp < 0 ? -1 : 1;
        const int reps = t.exp < 0 ? -t.exp : t.exp;
        for (int r = 0; r < reps; ++r)
            w.letters.push_back(t.kind == 's'   ? ssigma(t.index, sgn)
                                : t.kind == 't' ? stau(t.index, sgn)
                                                : sband(t.index));
    }
    validate_singular(w);
    return w;
}

int singular_writhe(const SingularWord& w) {
    int e = 0;
    for (const auto& l : w.letters) {
        if (l.kind == SGen::Sigma) e += l.exp;
        if (l.kind == SGen::Tau) e += 2 * l.exp;
    }
    return e;
}

int singular_closure_components(const SingularWord& w) {
    std::vector<int> perm(static_cast<std::size_t>(w.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : w.letters) {
        if (l.kind == SGen::Tau) continue;
        std::swap(perm[static_cast<std::size_t>(l.index - 1)],
                  perm[static_cast<std::size_t>(l.index)]);
    }
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles + w.genus;
}

namespace {

nlohmann::json series_json(const TruncatedSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) arr.push_back({e, rational_str(c)});
    return arr;
}

} // namespace

std::string record_json(const RecordInput& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["word"] = r.word;
    j["g"] = r.genus;
    j["n"] = r.strands;
    j["i"] = r.killed;
    j["d"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json();
    j["D"] = r.order;
    j["value"] = r.value ? nlohmann::json(rational_str(*r.value)) : nlohmann::json();
    j["series"] = series_json(r.series);
    j["metadata"] = {{"writhe", r.writhe},
                     {"components", r.components},
                     {"operator", r.operator_id},
                     {"seed", r.seed}};
    return j.dump(2);
}

std::string record_table(const RecordInput& r) {
    std::ostringstream os;
    os << "word:       " << r.word << "\n";
    os << "g, n, i:    " << r.genus << ", " << r.strands << ", " << r.killed << "\n";
    if (r.degree) os << "degree:     " << *r.degree << "\n";
    os << "order:      " << r.order << "\n";
    if (r.value) os << "value:      " << rational_str(*r.value) << "\n";
    os << "series:     " << r.series.str() << "\n";
    os << "writhe:     " << r.writhe << "\n";
    os << "components: " << r.components << "\n";
    os << "operator:   " << r.operator_id << "\n";
    return os.str();
}

} // namespace hb
