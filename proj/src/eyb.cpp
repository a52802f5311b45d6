#include "hb/eyb.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "hb/config.hpp"
#include "hb/error.hpp"

namespace hb {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, LaurentPoly(Rational(1)));
    return m;
}

LaurentPoly PolyMatrix::entry(int r, int c) const {
    const auto& col = cols_[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    return it == col.end() ? LaurentPoly() : it->second;
}

void PolyMatrix::set(int r, int c, const LaurentPoly& v) {
    auto& col = cols_[static_cast<std::size_t>(c)];
    if (v.is_zero())
        col.erase(r);
    else
        col[r] = v;
}

void PolyMatrix::add(int r, int c, const LaurentPoly& v) {
    if (v.is_zero()) return;
    auto& col = cols_[static_cast<std::size_t>(c)];
    auto it = col.find(r);
    if (it == col.end()) {
        col.emplace(r, v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero()) col.erase(it);
    }
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    PolyMatrix out(n_);
    for (int c = 0; c < n_; ++c) {
        auto& out_col = out.cols_[static_cast<std::size_t>(c)];
        for (const auto& [k, okc] : o.cols_[static_cast<std::size_t>(c)]) {
            for (const auto& [r, trk] : cols_[static_cast<std::size_t>(k)]) {
                auto it = out_col.find(r);
                if (it == out_col.end())
                    out_col.emplace(r, trk * okc);
                else
                    it->second = it->second + trk * okc;
            }
        }
        for (auto it = out_col.begin(); it != out_col.end();) {
            if (it->second.is_zero())
                it = out_col.erase(it);
            else
                ++it;
        }
    }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    PolyMatrix out = *this;
    for (int c = 0; c < n_; ++c)
        for (const auto& [r, v] : o.cols_[static_cast<std::size_t>(c)]) out.add(r, c, v);
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    PolyMatrix out = *this;
    for (int c = 0; c < n_; ++c)
        for (const auto& [r, v] : o.cols_[static_cast<std::size_t>(c)]) out.add(r, c, -v);
    return out;
}

PolyMatrix PolyMatrix::scaled(const LaurentPoly& c) const {
    PolyMatrix out(n_);
    if (c.is_zero()) return out;
    for (int j = 0; j < n_; ++j)
        for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) out.set(r, j, v * c);
    return out;
}

LaurentPoly PolyMatrix::trace() const {
    LaurentPoly t;
    for (int c = 0; c < n_; ++c) {
        auto it = cols_[static_cast<std::size_t>(c)].find(c);
        if (it != cols_[static_cast<std::size_t>(c)].end()) t = t + it->second;
    }
    return t;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return n_ == o.n_ && cols_ == o.cols_;
}

std::size_t PolyMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : cols_) n += col.size();
    return n;
}

PolyMatrix embed_pair_op(const PolyMatrix& local, int d, int m, int pos) {
    if (local.dim() != d * d) throw ValidationError("embed_pair_op: local operator has wrong dimension");
    if (pos < 0 || pos + 1 >= m) throw ValidationError("embed_pair_op: slot out of range");
    std::int64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= d;
        if (total > static_cast<std::int64_t>(limits().max_tensor_dim))
            throw ResourceError("tensor space dimension exceeds the configured bound");
    }
    const int n = static_cast<int>(total);
    // Stride of the less significant slot of the pair.
    std::int64_t stride = 1;
    for (int i = pos + 2; i < m; ++i) stride *= d;
    const std::int64_t lo_stride = stride;
    const std::int64_t hi_stride = stride * d;

    PolyMatrix out(n);
    for (int c = 0; c < n; ++c) {
        const int hi_in = static_cast<int>((c / hi_stride) % d);
        const int lo_in = static_cast<int>((c / lo_stride) % d);
        const int pair_in = hi_in * d + lo_in;
        const std::int64_t base = c - hi_in * hi_stride - lo_in * lo_stride;
        for (const auto& [pair_out, v] : local.col(pair_in)) {
            const int hi_out = pair_out / d;
            const int lo_out = pair_out % d;
            const std::int64_t r = base + hi_out * hi_stride + lo_out * lo_stride;
            out.add(static_cast<int>(r), c, v);
        }
    }
    return out;
}

LaurentPoly EYBOperator::loop_value() const {
    LaurentPoly t;
    for (const auto& m : mu) t = t + m;
    return t;
}

PolyMatrix partial_trace_second(const PolyMatrix& x, const std::vector<LaurentPoly>& mu) {
    const int d = static_cast<int>(mu.size());
    if (x.dim() != d * d) throw ValidationError("partial_trace_second: dimension mismatch");
    PolyMatrix out(d);
    for (int a = 0; a < d; ++a) {
        for (int k = 0; k < d; ++k) {
            const int c_in = a * d + k;
            for (const auto& [r, v] : x.col(c_in)) {
                if (r % d != k) continue; // diagonal in the traced factor
                out.add(r / d, a, v * mu[static_cast<std::size_t>(k)]);
            }
        }
    }
    return out;
}

const EYBOperator& builtin_operator() {
    static const EYBOperator op = [] {
        EYBOperator o;
        o.dim = 2;
        o.R = PolyMatrix(4);
        o.Rinv = PolyMatrix(4);
        const LaurentPoly q = LaurentPoly::monomial(1, 1);
        const LaurentPoly qi = LaurentPoly::monomial(1, -1);
        // Basis order on pairs: 00, 01, 10, 11.
        o.R.set(0, 0, q);
        o.R.set(3, 3, q);
        o.R.set(1, 2, qi);
        o.R.set(2, 1, qi);
        o.R.set(2, 2, q - LaurentPoly::monomial(1, -3));
        o.Rinv.set(0, 0, qi);
        o.Rinv.set(3, 3, qi);
        o.Rinv.set(1, 2, q);
        o.Rinv.set(2, 1, q);
        o.Rinv.set(1, 1, qi - LaurentPoly::monomial(1, 3));
        o.mu = {LaurentPoly::monomial(-1, 2), LaurentPoly::monomial(-1, -2)};
        o.alpha = LaurentPoly::monomial(-1, 3);
        o.beta = LaurentPoly(Rational(1));
        return o;
    }();
    return op;
}

Report eyb_axioms_check(const EYBOperator& op) {
    Report rep("eyb");
    const int d = op.dim;
    if (d < 2) throw ValidationError("operator dimension must be at least 2");
    if (static_cast<int>(op.mu.size()) != d)
        throw ValidationError("twist diagonal has wrong length");

    rep.add("alpha is an invertible monomial", op.alpha.is_monomial() && !op.alpha.is_zero());
    rep.add("beta is an invertible monomial", op.beta.is_monomial() && !op.beta.is_zero());
    if (!rep.all_pass()) return rep; // inverses below would be undefined

    const PolyMatrix id2 = PolyMatrix::identity(d * d);
    rep.add("R * Rinv = 1", op.R * op.Rinv == id2);
    rep.add("Rinv * R = 1", op.Rinv * op.R == id2);

    // Yang-Baxter in braid form on the triple tensor space:
    // (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R).
    const PolyMatrix r12 = embed_pair_op(op.R, d, 3, 0);
    const PolyMatrix r23 = embed_pair_op(op.R, d, 3, 1);
    rep.add("Yang-Baxter equation", r12 * r23 * r12 == r23 * r12 * r23);

    // mu (x) mu commutes with R.
    PolyMatrix mu2(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            mu2.set(a * d + b, a * d + b,
                    op.mu[static_cast<std::size_t>(a)] * op.mu[static_cast<std::size_t>(b)]);
    rep.add("twist commutes with R", mu2 * op.R == op.R * mu2);

    const LaurentPoly ab = op.alpha * op.beta;
    const LaurentPoly aib = op.alpha.unit_inverse() * op.beta;
    const PolyMatrix idd = PolyMatrix::identity(d);
    rep.add("positive partial trace = alpha*beta",
            partial_trace_second(op.R, op.mu) == idd.scaled(ab));
    rep.add("negative partial trace = alpha^-1*beta",
            partial_trace_second(op.Rinv, op.mu) == idd.scaled(aib));
    return rep;
}

namespace {

std::string poly_token(const LaurentPoly& p) { return p.pair_str(); }

void serialize_matrix(std::ostream& os, const char* tag, const PolyMatrix& m) {
    for (int c = 0; c < m.dim(); ++c)
        for (const auto& [r, v] : m.col(c)) os << tag << ' ' << r << ' ' << c << ' ' << poly_token(v) << '\n';
}

std::string canonical_serialization(const EYBOperator& op) {
    std::ostringstream os;
    os << "dim " << op.dim << '\n';
    serialize_matrix(os, "R", op.R);
    serialize_matrix(os, "Rinv", op.Rinv);
    for (int i = 0; i < op.dim; ++i)
        if (!op.mu[static_cast<std::size_t>(i)].is_zero())
            os << "mu " << i << ' ' << poly_token(op.mu[static_cast<std::size_t>(i)]) << '\n';
    os << "alpha " << poly_token(op.alpha) << '\n';
    os << "beta " << poly_token(op.beta) << '\n';
    return os.str();
}

} // namespace

std::string EYBOperator::convention_id() const {
    // FNV-1a over the canonical serialization, folded to 8 hex digits.
    const std::string s = canonical_serialization(*this);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    const std::uint32_t folded = static_cast<std::uint32_t>(h ^ (h >> 32));
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", folded);
    return std::string(buf);
}

void save_operator_file(const EYBOperator& op, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open operator file for writing: " + path);
    os << "# enhanced operator definition\n" << canonical_serialization(op);
    if (!os) throw ResourceError("failed writing operator file: " + path);
}

EYBOperator load_operator_file(const std::string& path, bool validate) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open operator file: " + path);
    EYBOperator op;
    bool have_dim = false, have_alpha = false, have_beta = false, have_rinv = false;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ValidationError("operator file " + path + " line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "dim") {
            if (!(ls >> op.dim) || op.dim < 2) fail("dim must be an integer >= 2");
            std::int64_t sq = static_cast<std::int64_t>(op.dim) * op.dim;
            if (sq > static_cast<std::int64_t>(limits().max_tensor_dim)) fail("dim exceeds the configured tensor bound");
            have_dim = true;
            op.R = PolyMatrix(op.dim * op.dim);
            op.Rinv = PolyMatrix(op.dim * op.dim);
            op.mu.assign(static_cast<std::size_t>(op.dim), LaurentPoly());
        } else if (key == "R" || key == "Rinv") {
            if (!have_dim) fail("dim must come before matrix entries");
            int r, c;
            std::string pairs;
            if (!(ls >> r >> c >> pairs)) fail("expected: " + key + " <row> <col> <pairs>");
            if (r < 0 || c < 0 || r >= op.dim * op.dim || c >= op.dim * op.dim)
                fail("matrix index out of range");
            PolyMatrix& m = (key == "R") ? op.R : op.Rinv;
            if (!m.entry(r, c).is_zero()) fail("duplicate entry for " + key);
            m.set(r, c, LaurentPoly::parse_pairs(pairs));
            if (key == "Rinv") have_rinv = true;
        } else if (key == "mu") {
            if (!have_dim) fail("dim must come before mu entries");
            int i;
            std::string pairs;
            if (!(ls >> i >> pairs)) fail("expected: mu <index> <pairs>");
            if (i < 0 || i >= op.dim) fail("mu index out of range");
            op.mu[static_cast<std::size_t>(i)] = LaurentPoly::parse_pairs(pairs);
        } else if (key == "alpha" || key == "beta") {
            std::string pairs;
            if (!(ls >> pairs)) fail("expected: " + key + " <pairs>");
            (key == "alpha" ? op.alpha : op.beta) = LaurentPoly::parse_pairs(pairs);
            (key == "alpha" ? have_alpha : have_beta) = true;
        } else {
            fail("unknown key '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing token '" + extra + "'");
    }
    if (!have_dim) throw ValidationError("operator file " + path + ": missing dim");
    if (!have_rinv) throw ValidationError("operator file " + path + ": missing Rinv entries (the inverse must be listed)");
    if (!have_alpha || !have_beta) throw ValidationError("operator file " + path + ": missing alpha or beta");
    if (validate) {
        Report rep = eyb_axioms_check(op);
        if (!rep.all_pass()) {
            std::string msg = "operator file " + path + " fails the axioms check:";
            for (const auto& it : rep.items)
                if (!it.informational && !it.pass) msg += " [" + it.name + "]";
            throw ValidationError(msg);
        }
    }
    return op;
}

} // namespace hb
