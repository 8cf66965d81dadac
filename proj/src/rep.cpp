#include "chev/rep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace chev {

namespace {

using IMat = std::vector<std::vector<std::int64_t>>;

IMat zeros(int n) { return IMat(n, std::vector<std::int64_t>(n, 0)); }

IMat mul(const IMat& a, const IMat& b) {
    const int n = static_cast<int>(a.size());
    IMat c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!a[i][k]) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IMat bracket_div(const IMat& a, const IMat& b, std::int64_t d) {
    IMat ab = mul(a, b), ba = mul(b, a);
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = ab[i][j] - ba[i][j];
            if (v % d != 0) throw std::logic_error("root vector is not integral");
            ab[i][j] = v / d;
        }
    return ab;
}

Sparse to_sparse(const IMat& m) {
    Sparse s;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        for (int j = 0; j < static_cast<int>(m.size()); ++j)
            if (m[i][j]) s.push_back({i, j, m[i][j]});
    return s;
}

// (A * B) / d, exact
Sparse spmul_div(const Sparse& a, const Sparse& b, std::int64_t d) {
    std::map<int, std::vector<std::pair<int, std::int64_t>>> by_col;
    for (const auto& e : a) by_col[e.col].push_back({e.row, e.val});
    std::map<std::pair<int, int>, std::int64_t> acc;
    for (const auto& e : b) {
        auto it = by_col.find(e.row);
        if (it == by_col.end()) continue;
        for (auto [i, v] : it->second) acc[{i, e.col}] += v * e.val;
    }
    Sparse out;
    for (auto [key, v] : acc) {
        if (v == 0) continue;
        if (v % d != 0) throw std::logic_error("divided power is not integral");
        out.push_back({key.first, key.second, v / d});
    }
    return out;
}

void set(IMat& m, int i, int j, std::int64_t v) { m[i][j] = v; }

}  // namespace

const Rep& Rep::get(const RootSystem& rs, RepKind kind) {
    static std::mutex mu;
    static std::map<std::pair<const RootSystem*, RepKind>, std::unique_ptr<Rep>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{&rs, kind}];
    if (!slot) slot.reset(new Rep(rs, kind));
    return *slot;
}

RepKind Rep::default_kind(const RootSystem& rs) {
    switch (rs.type()) {
        case 'A': return RepKind::NaturalA;
        case 'B': return RepKind::VectorB;
        case 'C': return RepKind::NaturalC;
        case 'D': return RepKind::VectorD;
        default: return RepKind::Adjoint;
    }
}

std::vector<RepKind> Rep::supported(const RootSystem& rs) {
    std::vector<RepKind> out;
    if (rs.type() != 'E' && rs.type() != 'F' && rs.type() != 'G') out.push_back(default_kind(rs));
    out.push_back(RepKind::Adjoint);
    if (rs.type() == 'E' && rs.rank() <= 7) out.push_back(RepKind::Minuscule);
    return out;
}

RepKind Rep::parse_kind(const std::string& s) {
    if (s == "natural_A") return RepKind::NaturalA;
    if (s == "natural_C") return RepKind::NaturalC;
    if (s == "vector_B") return RepKind::VectorB;
    if (s == "vector_D") return RepKind::VectorD;
    if (s == "adjoint") return RepKind::Adjoint;
    if (s == "minuscule" || s == "minuscule_E7" || s == "minuscule_E6") return RepKind::Minuscule;
    throw UnsupportedRep("unknown representation '" + s + "'");
}

std::string Rep::kind_name(RepKind k) {
    switch (k) {
        case RepKind::NaturalA: return "natural_A";
        case RepKind::NaturalC: return "natural_C";
        case RepKind::VectorB: return "vector_B";
        case RepKind::VectorD: return "vector_D";
        case RepKind::Adjoint: return "adjoint";
        case RepKind::Minuscule: return "minuscule";
    }
    return "?";
}

std::string Rep::tag() const {
    if (kind_ == RepKind::Minuscule) return "minuscule_" + rs_.label();
    return kind_name(kind_);
}

bool Rep::center_faithful() const {
    switch (kind_) {
        case RepKind::NaturalA:
        case RepKind::NaturalC:
        case RepKind::Minuscule:
            return true;
        case RepKind::Adjoint:
            return rs_.type() == 'G' || rs_.type() == 'F' || (rs_.type() == 'E' && rs_.rank() == 8);
        default:
            return false;
    }
}

bool Rep::supports_center_sign() const { return kind_ == RepKind::NaturalA && dim_ % 2 == 0; }

Rep::Rep(const RootSystem& rs, RepKind kind) : rs_(rs), kind_(kind) {
    const int l = rs.rank();
    auto allowed = supported(rs);
    if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end())
        throw UnsupportedRep("representation " + kind_name(kind) + " is not available for " + rs.label());
    std::vector<IMat> es, fs;
    auto transpose = [](const IMat& m) {
        IMat t = m;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
        return t;
    };
    switch (kind) {
        case RepKind::Adjoint:
            build_adjoint();
            finish();
            return;
        case RepKind::NaturalA: {
            const int n = l + 1;
            for (int i = 0; i < l; ++i) {
                IMat e = zeros(n);
                set(e, i, i + 1, 1);
                es.push_back(e);
                fs.push_back(transpose(e));
            }
            break;
        }
        case RepKind::NaturalC:
        case RepKind::VectorD:
        case RepKind::VectorB: {
            // basis v_1..v_l, (v_0 for B), v_-l..v_-1
            const bool b = kind == RepKind::VectorB;
            const int n = 2 * l + (b ? 1 : 0);
            auto P = [&](int k) { return k > 0 ? k - 1 : n + k; };
            for (int i = 1; i < l; ++i) {
                IMat e = zeros(n);
                set(e, P(i), P(i + 1), 1);
                set(e, P(-(i + 1)), P(-i), -1);
                es.push_back(e);
                fs.push_back(transpose(e));
            }
            IMat e = zeros(n), f = zeros(n);
            if (kind == RepKind::NaturalC) {
                set(e, P(l), P(-l), 1);
                f = transpose(e);
            } else if (kind == RepKind::VectorD) {
                set(e, P(l - 1), P(-l), 1);
                set(e, P(l), P(-(l - 1)), -1);
                f = transpose(e);
            } else {
                const int zero = l;
                set(e, P(l), zero, -2);
                set(e, zero, P(-l), 1);
                set(f, zero, P(l), -1);
                set(f, P(-l), zero, 2);
            }
            es.push_back(e);
            fs.push_back(f);
            break;
        }
        case RepKind::Minuscule: {
            // weights of the minuscule module in fundamental-weight coordinates
            const int top = rs.rank() == 7 ? 7 : 1;
            std::vector<std::vector<int>> wts;
            std::map<std::vector<int>, int> idx;
            std::vector<int> hw(l, 0);
            hw[top - 1] = 1;
            wts.push_back(hw);
            idx[hw] = 0;
            for (std::size_t at = 0; at < wts.size(); ++at)
                for (int i = 0; i < l; ++i) {
                    if (wts[at][i] <= 0) continue;
                    std::vector<int> nw = wts[at];
                    for (int k = 0; k < l; ++k) nw[k] -= rs.cartan(i, k);
                    if (!idx.count(nw)) {
                        idx[nw] = static_cast<int>(wts.size());
                        wts.push_back(nw);
                    }
                }
            const int n = static_cast<int>(wts.size());
            for (int i = 0; i < l; ++i) {
                IMat e = zeros(n), f = zeros(n);
                for (int j = 0; j < n; ++j) {
                    std::vector<int> up = wts[j];
                    for (int k = 0; k < l; ++k) up[k] += rs.cartan(i, k);
                    auto it = idx.find(up);
                    if (it != idx.end()) {
                        set(e, it->second, j, 1);
                        set(f, j, it->second, 1);
                    }
                }
                es.push_back(e);
                fs.push_back(f);
            }
            break;
        }
    }
    build_from_simple(es, fs);
    finish();
    if (relation_failures() != 0) throw std::logic_error("module " + tag() + " violates the Chevalley relations");
}

void Rep::build_from_simple(const std::vector<IMat>& es, const std::vector<IMat>& fs) {
    const auto& sc = StructureConstants::get(rs_);
    const int l = rs_.rank();
    dim_ = static_cast<int>(es[0].size());
    std::vector<IMat> E(rs_.num_roots());
    for (int i = 0; i < l; ++i) {
        E[rs_.simple(i + 1)] = es[i];
        E[rs_.neg(rs_.simple(i + 1))] = fs[i];
    }
    for (int xi = 0; xi < rs_.num_positive(); ++xi) {
        if (rs_.height(xi) < 2) continue;
        auto [a, b] = sc.extraspecial(xi);
        E[xi] = bracket_div(E[a], E[b], sc.N(a, b));
        E[rs_.neg(xi)] = bracket_div(E[rs_.neg(a)], E[rs_.neg(b)], sc.N(rs_.neg(a), rs_.neg(b)));
    }
    e_.resize(rs_.num_roots());
    for (int a = 0; a < rs_.num_roots(); ++a) e_[a] = to_sparse(E[a]);
    weights_.assign(dim_, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) {
        IMat h = bracket_div(es[i], fs[i], 1);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                if (r != c && h[r][c] != 0) throw std::logic_error("coroot does not act diagonally");
        for (int r = 0; r < dim_; ++r) weights_[r][i] = static_cast<int>(h[r][r]);
    }
}

void Rep::build_adjoint() {
    const auto& sc = StructureConstants::get(rs_);
    const int l = rs_.rank();
    dim_ = sc.adjoint_dim();
    e_.resize(rs_.num_roots());
    for (int a = 0; a < rs_.num_roots(); ++a) e_[a] = sc.ad(a);
    weights_.assign(dim_, std::vector<int>(l, 0));
    for (int b = 0; b < rs_.num_roots(); ++b)
        for (int j = 0; j < l; ++j) weights_[sc.adjoint_index_of_root(b)][j] = rs_.pairing(b, rs_.simple(j + 1));
}

int Rep::weight_pairing(int basis, int root) const {
    const auto& co = rs_.coroot(root);
    int s = 0;
    for (int j = 0; j < rs_.rank(); ++j) s += co[j] * weights_[basis][j];
    return s;
}

void Rep::finish() {
    const int nr = rs_.num_roots();
    right_steps_.assign(nr, {});
    left_steps_.assign(nr, {});
    for (int a = 0; a < nr; ++a) {
        std::vector<Step> steps;
        Sparse p = e_[a];
        for (int k = 1; !p.empty(); ++k) {
            if (k > 4) throw std::logic_error("root element is not nilpotent of small order");
            for (const auto& e : p) steps.push_back({e.row, e.col, k, e.val});
            p = spmul_div(p, e_[a], k + 1);
        }
        // right action M*X updates column `col` from column `row`; targets with low weight first
        auto& rs = right_steps_[a];
        for (const auto& s : steps) rs.push_back({s.source, s.target, s.power, s.val});
        std::stable_sort(rs.begin(), rs.end(), [&](const Step& x, const Step& y) {
            return weight_pairing(x.target, a) < weight_pairing(y.target, a);
        });
        auto& ls = left_steps_[a];
        ls = steps;
        std::stable_sort(ls.begin(), ls.end(), [&](const Step& x, const Step& y) {
            return weight_pairing(x.target, a) > weight_pairing(y.target, a);
        });
    }
}

void Rep::apply_x_right(Matrix& m, int root, Elem t) const {
    const Ring& r = m.ring();
    if (r.is_zero(t)) return;
    Elem tp[5];
    tp[0] = r.one();
    for (int k = 1; k < 5; ++k) tp[k] = r.mul(tp[k - 1], t);
    const int rows = m.rows();
    for (const Step& s : right_steps_[root]) {
        const Elem c = r.mul(tp[s.power], r.from_int(s.val));
        if (r.is_zero(c)) continue;
        for (int i = 0; i < rows; ++i) {
            const Elem src = m.at(i, s.source);
            if (r.is_zero(src)) continue;
            m.at(i, s.target) = r.add(m.at(i, s.target), r.mul(c, src));
        }
    }
}

void Rep::apply_x_vec(std::vector<Elem>& v, int root, Elem t, const Ring& r) const {
    if (r.is_zero(t)) return;
    Elem tp[5];
    tp[0] = r.one();
    for (int k = 1; k < 5; ++k) tp[k] = r.mul(tp[k - 1], t);
    for (const Step& s : left_steps_[root]) {
        if (r.is_zero(v[s.source])) continue;
        const Elem c = r.mul(tp[s.power], r.from_int(s.val));
        v[s.target] = r.add(v[s.target], r.mul(c, v[s.source]));
    }
}

void Rep::apply_right(Matrix& m, const Token& t) const {
    const Ring& r = m.ring();
    switch (t.kind) {
        case Tok::X:
            apply_x_right(m, t.root, t.t);
            return;
        case Tok::W: {
            const Elem mu = r.neg(r.inv(t.t));
            apply_x_right(m, t.root, t.t);
            apply_x_right(m, rs_.neg(t.root), mu);
            apply_x_right(m, t.root, t.t);
            return;
        }
        case Tok::H: {
            const Elem ui = r.inv(t.t);
            for (int j = 0; j < dim_; ++j) {
                const int p = weight_pairing(j, t.root);
                if (p == 0) continue;
                const Elem f = r.pow(p > 0 ? t.t : ui, p > 0 ? p : -p);
                for (int i = 0; i < m.rows(); ++i) m.at(i, j) = r.mul(m.at(i, j), f);
            }
            return;
        }
    }
}

void Rep::apply_vec(std::vector<Elem>& v, const Token& t, const Ring& r) const {
    switch (t.kind) {
        case Tok::X:
            apply_x_vec(v, t.root, t.t, r);
            return;
        case Tok::W: {
            const Elem mu = r.neg(r.inv(t.t));
            apply_x_vec(v, t.root, t.t, r);
            apply_x_vec(v, rs_.neg(t.root), mu, r);
            apply_x_vec(v, t.root, t.t, r);
            return;
        }
        case Tok::H: {
            const Elem ui = r.inv(t.t);
            for (int j = 0; j < dim_; ++j) {
                const int p = weight_pairing(j, t.root);
                if (p == 0 || r.is_zero(v[j])) continue;
                v[j] = r.mul(v[j], r.pow(p > 0 ? t.t : ui, p > 0 ? p : -p));
            }
            return;
        }
    }
}

void Rep::apply_word_vec(std::vector<Elem>& v, const GenWord& w, const Ring& r) const {
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) apply_vec(v, *it, r);
    if (w.center == -1) {
        if (!supports_center_sign()) throw InvalidInput("central sign is not representable in " + tag());
        for (auto& x : v) x = r.neg(x);
    }
}

Matrix Rep::gen_matrix(const Token& t, const Ring& r) const {
    Matrix m = Matrix::identity(r, dim_);
    apply_right(m, t);
    return m;
}

Matrix Rep::eval(const GenWord& w, const Ring& r) const {
    if (w.center == -1 && !supports_center_sign())
        throw InvalidInput("central sign is not representable in " + tag());
    Matrix m = Matrix::identity(r, dim_);
    for (const Token& t : w.tokens) apply_right(m, t);
    if (w.center == -1) m = m.scaled(r.from_int(-1));
    return m;
}

int Rep::relation_failures() const {
    const auto& sc = StructureConstants::get(rs_);
    const int nr = rs_.num_roots();
    std::vector<std::vector<std::vector<std::pair<int, std::int64_t>>>> cols(nr);
    for (int a = 0; a < nr; ++a) {
        cols[a].resize(dim_);
        for (const auto& e : e_[a]) cols[a][e.col].push_back({e.row, e.val});
    }
    std::vector<std::int64_t> v1(dim_), v2(dim_);
    int failures = 0;
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (a == b) continue;
            const int s = rs_.sum(a, b);
            for (int k = 0; k < dim_; ++k) {
                std::fill(v1.begin(), v1.end(), 0);
                for (auto [r, x] : cols[b][k])
                    for (auto [r2, y] : cols[a][r]) v1[r2] += x * y;
                for (auto [r, x] : cols[a][k])
                    for (auto [r2, y] : cols[b][r]) v1[r2] -= x * y;
                std::fill(v2.begin(), v2.end(), 0);
                if (s >= 0)
                    for (auto [r, x] : cols[s][k]) v2[r] += sc.N(a, b) * x;
                if (b == rs_.neg(a)) v2[k] += weight_pairing(k, a);
                if (v1 != v2) {
                    ++failures;
                    break;
                }
            }
        }
    return failures;
}

}  // namespace chev
