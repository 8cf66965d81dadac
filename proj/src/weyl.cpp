#include "chev/weyl.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace chev {

int weyl_sign(const RootSystem& rs, int a, int b) {
    static std::mutex mu;
    static std::map<const RootSystem*, std::vector<std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[&rs];
    if (table.empty()) table.resize(rs.num_roots());
    auto& row = table[a];
    if (row.empty()) {
        const Rep& ad = Rep::get(rs, RepKind::Adjoint);
        const auto& sc = StructureConstants::get(rs);
        Ring z = Ring::integers();
        row.resize(rs.num_roots());
        for (int c = 0; c < rs.num_roots(); ++c) {
            std::vector<Elem> v(ad.dim(), z.zero());
            v[sc.adjoint_index_of_root(c)] = z.one();
            ad.apply_vec(v, Token{Tok::W, a, z.one()}, z);
            const std::int64_t e = v[sc.adjoint_index_of_root(rs.reflect(a, c))].v;
            if (e != 1 && e != -1) throw std::logic_error("w_a(1) is not monomial on root vectors");
            row[c] = static_cast<int>(e);
        }
    }
    return row[b];
}

Monomial::Monomial(const RootSystem& rs) : rs_(&rs), perm_(rs.num_roots()), t_(rs.rank(), 0) {
    for (int b = 0; b < rs.num_roots(); ++b) perm_[b] = b;
}

Monomial Monomial::from_word(const RootSystem& rs, const GenWord& w, const Ring& r) {
    Monomial m(rs);
    for (const Token& t : w.tokens) {
        int sign;
        if (t.t == r.one())
            sign = 1;
        else if (t.t == r.from_int(-1))
            sign = -1;
        else
            throw InvalidInput("monomial tokens need parameter +-1");
        if (t.kind == Tok::X) throw InvalidInput("x-token in a monomial word");
        if (t.kind == Tok::H) {
            if (sign == -1) m.mul_h(t.root);
            continue;
        }
        int root = t.root;
        if (!rs.positive(root)) {
            root = rs.neg(root);
            sign = -sign;  // w_{-a}(u) = w_a(-u^-1)
        }
        if (rs.height(root) != 1) throw InvalidInput("monomial words use simple reflections only");
        int k = 1;
        while (rs.simple(k) != root) ++k;
        m.mul_w(k, sign);
    }
    return m;
}

void Monomial::mul_h(int root) {
    const auto& co = rs_->coroot(perm_[root]);
    for (int j = 0; j < rs_->rank(); ++j) t_[j] = (t_[j] + co[j]) & 1;
}

void Monomial::mul_w(int k, int sign) {
    const int a = rs_->simple(k);
    if (!rs_->positive(perm_[a])) {
        // n_w = n_{w s_k} w_k(1), and w_k(1)^2 = h_k(-1)
        const auto& co = rs_->coroot(perm_[a]);
        for (int j = 0; j < rs_->rank(); ++j) t_[j] = (t_[j] + co[j]) & 1;
    }
    std::vector<int> np(perm_.size());
    for (std::size_t b = 0; b < perm_.size(); ++b) np[b] = perm_[rs_->simple_reflect(k, static_cast<int>(b))];
    perm_ = std::move(np);
    if (sign == -1) mul_h(a);
}

WeylWord Monomial::reduced() const { return rs_->reduced_word(perm_); }

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m = *this;
    for (int j = 0; j < rs_->rank(); ++j)
        if (o.t_[j]) m.mul_h(rs_->simple(j + 1));
    for (int k : o.reduced()) m.mul_w(k, 1);
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m(*rs_);
    const WeylWord w = reduced();
    for (auto it = w.rbegin(); it != w.rend(); ++it) m.mul_w(*it, -1);
    for (int j = 0; j < rs_->rank(); ++j)
        if (t_[j]) m.mul_h(rs_->simple(j + 1));
    return m;
}

GenWord Monomial::word(const Ring& r) const {
    GenWord w;
    for (int j = 0; j < rs_->rank(); ++j)
        if (t_[j]) w.tokens.push_back({Tok::H, rs_->simple(j + 1), r.from_int(-1)});
    for (int k : reduced()) w.tokens.push_back({Tok::W, rs_->simple(k), r.one()});
    return w;
}

int Monomial::conj_sign(int b) const {
    int sign = 1;
    int cur = b;
    const WeylWord w = reduced();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int a = rs_->simple(*it);
        sign *= weyl_sign(*rs_, a, cur);
        cur = rs_->reflect(a, cur);
    }
    int p = 0;
    for (int j = 0; j < rs_->rank(); ++j)
        if (t_[j]) p += rs_->pairing(cur, rs_->simple(j + 1));
    return (p & 1) ? -sign : sign;
}

GenWord Monomial::conj(const GenWord& xword, const Ring& r) const {
    GenWord out;
    out.center = xword.center;
    for (const Token& t : xword.tokens) {
        if (t.kind != Tok::X) throw InvalidInput("symbolic conjugation expects x-tokens");
        const int s = conj_sign(t.root);
        out.tokens.push_back({Tok::X, perm_[t.root], s == 1 ? t.t : r.neg(t.t)});
    }
    return out;
}

bool torus_is_central(const RootSystem& rs, const std::vector<int>& t) {
    for (int j = 0; j < rs.rank(); ++j) {
        int p = 0;
        for (int i = 0; i < rs.rank(); ++i) p += t[i] * rs.cartan(j, i);
        if (p & 1) return false;
    }
    return true;
}

GenWord SignedLift::gen_word(const RootSystem& rs, const Ring& r) const {
    GenWord w;
    for (std::size_t k = 0; k < word.size(); ++k) w.tokens.push_back({Tok::W, rs.simple(word[k]), r.from_int(signs[k])});
    return w;
}

nlohmann::json SignedLift::to_json() const { return {{"word", word}, {"signs", signs}}; }

SignedLift SignedLift::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("word") || !j.contains("signs")) throw InvalidInput("signed lift needs word and signs");
    SignedLift s{j.at("word").get<WeylWord>(), j.at("signs").get<std::vector<int>>()};
    if (s.word.size() != s.signs.size()) throw InvalidInput("signs must match the word");
    for (int v : s.signs)
        if (v != 1 && v != -1) throw InvalidInput("signs must be +-1");
    return s;
}

GenWord pi_lift(const RootSystem& rs, const Ring& r) {
    if (rs.rank() < 2) throw InvalidInput("pi needs rank >= 2");
    GenWord w;
    for (int k : rs.pi_word()) w.tokens.push_back({Tok::W, rs.simple(k), r.one()});
    return w;
}

Monomial obvious_lift(const RootSystem& rs, const WeylWord& w) {
    Monomial m(rs);
    for (int k : w) m.mul_w(k, 1);
    return m;
}

Monomial pi_monomial(const RootSystem& rs) { return obvious_lift(rs, rs.pi_word()); }

Monomial w0_lift(const RootSystem& rs) {
    Monomial m = obvious_lift(rs, rs.longest_word());
    if (rs.type() != 'A') return m;
    // target antidiagonal signs a_i at (i, n+1-i)
    const int n = rs.rank() + 1;
    std::vector<int> target(n, 1);
    if (n % 4 == 2) {
        for (int i = 0; i < n; ++i) target[i] = (i % 2 == 0) ? 1 : -1;
    } else if (n % 2 == 1 && ((n * (n - 1) / 2) % 2 == 1)) {
        std::fill(target.begin(), target.end(), -1);  // det p_n = -1, use -p_n
    }
    Ring z = Ring::integers();
    Matrix lift = Rep::get(rs, RepKind::NaturalA).eval(m.word(z), z);
    // h(t) = target * lift^-1 is diagonal d; h(t)_kk = (-1)^{t_k + t_{k-1}}
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = target[i] * static_cast<int>(lift.at(i, n - 1 - i).v);
    std::vector<int> t(rs.rank(), 0);
    int acc = 0;
    for (int k = 0; k < rs.rank(); ++k) {
        acc ^= d[k] == -1 ? 1 : 0;
        t[k] = acc;
    }
    Monomial h(rs);
    for (int k = 0; k < rs.rank(); ++k)
        if (t[k]) h.mul_h(rs.simple(k + 1));
    return h * m;
}

namespace {

// Solve B s = t over F_2; columns of B given. Returns empty optional on failure.
std::optional<std::vector<int>> solve_f2(std::vector<std::vector<int>> cols, std::vector<int> t) {
    const int n = static_cast<int>(t.size());
    const int m = static_cast<int>(cols.size());
    // augmented rows
    std::vector<std::vector<int>> a(n, std::vector<int>(m + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = cols[j][i] & 1;
        a[i][m] = t[i] & 1;
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < m && row < n; ++c) {
        int p = row;
        while (p < n && !a[p][c]) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        for (int i = 0; i < n; ++i)
            if (i != row && a[i][c])
                for (int j = 0; j <= m; ++j) a[i][j] ^= a[row][j];
        pivot_col.push_back(c);
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (a[i][m]) return std::nullopt;
    std::vector<int> s(m, 0);
    for (int i = 0; i < row; ++i) s[pivot_col[i]] = a[i][m];
    return s;
}

}  // namespace

Monomial to_monomial(const RootSystem& rs, const SignedLift& s) {
    Monomial m(rs);
    for (std::size_t k = 0; k < s.word.size(); ++k) m.mul_w(s.word[k], s.signs[k]);
    return m;
}

SignedLift sign_form(const RootSystem& rs, const Monomial& m) {
    const WeylWord word = rs.pi_word();
    Monomial base = pi_monomial(rs);
    if (m.perm() != base.perm()) throw InvalidInput("lift does not cover pi");
    std::vector<std::vector<int>> cols;
    for (std::size_t k = 0; k < word.size(); ++k) {
        SignedLift one{word, std::vector<int>(word.size(), 1)};
        one.signs[k] = -1;
        cols.push_back(to_monomial(rs, one).torus());
    }
    std::vector<int> diff(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) diff[j] = m.torus()[j] ^ base.torus()[j];
    auto s = solve_f2(cols, diff);
    if (!s) throw InvalidInput("lift is not a signed form of pi");
    SignedLift out{word, std::vector<int>(word.size(), 1)};
    for (std::size_t k = 0; k < word.size(); ++k)
        if ((*s)[k]) out.signs[k] = -1;
    if (!(to_monomial(rs, out) == m)) throw std::logic_error("sign form mismatch");
    return out;
}

SignedLift sign_flip(const RootSystem& rs, const SignedLift& s, int gamma) {
    SignedLift out = s;
    for (std::size_t k = 0; k < s.word.size(); ++k)
        if (rs.pairing(rs.simple(s.word[k]), gamma) & 1) out.signs[k] = -out.signs[k];
    return out;
}

namespace {

int root_of(const RootSystem& rs, const Root& r) {
    const int i = rs.index_of(r);
    if (i < 0) throw std::logic_error("chain root missing");
    return i;
}

Root unit(int l, int k) {
    Root r(l, 0);
    r[k - 1] = 1;
    return r;
}

// (letter index to fix, conjugating root) in order
std::vector<std::pair<int, int>> chain(const RootSystem& rs) {
    const int l = rs.rank();
    std::vector<std::pair<int, int>> c;
    auto s = [&](int k) { return rs.simple(k); };
    switch (rs.type()) {
        case 'B': {
            if (l < 3) return c;
            c.push_back({l, s(l - 1)});
            Root g1(l, 1);
            c.push_back({1, root_of(rs, g1)});
            for (int k = l - 1; k >= 3; --k) {
                Root g(l, 0);
                g[k - 2] = 1;
                for (int j = k; j <= l; ++j) g[j - 1] = 2;
                c.push_back({k, root_of(rs, g)});
            }
            c.push_back({2, rs.highest()});
            return c;
        }
        case 'C': {
            Root g = unit(l, l);
            g[l - 2] = 1;
            c.push_back({l, root_of(rs, g)});
            for (int k = 1; k < l; ++k) c.push_back({k, s(k + 1)});
            return c;
        }
        case 'E':
            if (l == 6) return {{2, s(4)}, {3, s(1)}, {5, s(6)}, {1, s(3)}, {6, s(5)}, {4, s(2)}};
            if (l == 8)
                return {{1, s(3)}, {2, s(4)}, {4, s(5)}, {5, s(6)}, {6, s(7)}, {7, s(8)}, {3, s(1)}, {8, rs.highest()}};
            return c;
        case 'F':
            return {{2, s(1)}, {1, s(2)}, {4, s(3)}, {3, s(4)}};
        case 'G':
            return {{2, s(1)}, {1, s(2)}};
        default:
            return c;
    }
}

}  // namespace

std::vector<int> normalize_lift(const RootSystem& rs, const SignedLift& lift) {
    const char t = rs.type();
    if (t == 'A' || t == 'D' || (t == 'E' && rs.rank() == 7))
        throw ExcludedType("sign normalization does not apply to " + rs.label());
    if (lift.word != rs.pi_word()) throw InvalidInput("lift must use the pi word");
    SignedLift cur = lift;
    std::vector<int> gammas;
    auto letter = [&](int k) {
        for (std::size_t i = 0; i < cur.word.size(); ++i)
            if (cur.word[i] == k) return static_cast<int>(i);
        return -1;
    };
    for (auto [k, g] : chain(rs)) {
        const int at = letter(k);
        if (at < 0 || cur.signs[at] == 1) continue;
        cur = sign_flip(rs, cur, g);
        gammas.push_back(g);
    }
    bool done = true;
    for (int s : cur.signs) done = done && s == 1;
    if (done) return gammas;
    // B2 has no chain; in B/C of even rank some sign vectors are out of reach altogether
    TorusNormalizer n;
    try {
        n = normalize_to_pi(rs, to_monomial(rs, cur));
    } catch (const std::logic_error&) {
        throw LiftNotConjugate("lift is not H(Z)-conjugate to pi in " + rs.label());
    }
    for (int j = 0; j < rs.rank(); ++j)
        if (n.t[j]) gammas.push_back(rs.simple(j + 1));
    return gammas;
}

GenWord TorusNormalizer::word(const RootSystem& rs, const Ring& r) const {
    GenWord w;
    for (int j = 0; j < rs.rank(); ++j)
        if (t[j]) w.tokens.push_back({Tok::H, rs.simple(j + 1), r.from_int(-1)});
    return w;
}

TorusNormalizer normalize_to_pi(const RootSystem& rs, const Monomial& rho) {
    const Monomial pi = pi_monomial(rs);
    if (rho.perm() != pi.perm()) throw std::logic_error("lift does not cover pi");
    const int l = rs.rank();
    std::optional<TorusNormalizer> central_fallback;
    for (int mask = 0; mask < (1 << l); ++mask) {
        Monomial h(rs);
        for (int j = 0; j < l; ++j)
            if (mask & (1 << j)) h.mul_h(rs.simple(j + 1));
        Monomial c = h * rho * h.inverse();
        std::vector<int> res(l);
        for (int j = 0; j < l; ++j) res[j] = c.torus()[j] ^ pi.torus()[j];
        TorusNormalizer out{h.torus(), res};
        bool zero = true;
        for (int v : res) zero = zero && v == 0;
        if (zero) return out;
        if (!central_fallback && torus_is_central(rs, res)) central_fallback = out;
    }
    if (central_fallback) return *central_fallback;
    throw std::logic_error("lift is not torus-conjugate to pi");
}

bool verify_nice(const RootSystem& rs, RepKind kind) {
    const char t = rs.type();
    if (!(t == 'A' || t == 'D' || (t == 'E' && rs.rank() == 7))) throw ExcludedType("verify_nice covers A, D and E7 only");
    const Rep& rep = Rep::get(rs, kind);
    Ring z = Ring::integers();
    Monomial w0 = obvious_lift(rs, rs.longest_word());
    const auto perm = w0.perm();
    GenWord w0w = w0.word(z);
    GenWord w0i = inverse(w0w, z);
    for (int i = 1; i <= rs.rank(); ++i) {
        const int j_root = rs.neg(perm[rs.simple(i)]);
        GenWord lhs = w0w * GenWord::w(rs.simple(i), z.one()) * w0i;
        if (rep.eval(lhs, z) != rep.eval(GenWord::w(j_root, z.one()), z)) return false;
    }
    return true;
}

}  // namespace chev
