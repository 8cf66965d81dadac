#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "chev/comm_decomp.hpp"
#include "chev/lie.hpp"

namespace chev {

namespace {

// exact rational with overflow checks; entries stay tiny in practice
struct Frac {
    __int128 n = 0, d = 1;
};
__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
Frac norm(__int128 n, __int128 d) {
    if (d < 0) n = -n, d = -d;
    __int128 g = gcd128(n, d);
    if (g > 1) n /= g, d /= g;
    const __int128 lim = (__int128)1 << 100;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("integer linear algebra overflow");
    return {n, d};
}
Frac sub(Frac a, Frac b) { return norm(a.n * b.d - b.n * a.d, a.d * b.d); }
Frac mul(Frac a, Frac b) { return norm(a.n * b.n, a.d * b.d); }
Frac div(Frac a, Frac b) { return norm(a.n * b.d, a.d * b.n); }

}  // namespace

std::int64_t int_adjugate(const IntMat& m, IntMat& adj) {
    const std::size_t n = m.size();
    std::vector<std::vector<Frac>> a(n, std::vector<Frac>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = {m[i][j], 1};
        a[i][n + i] = {1, 1};
    }
    Frac det{1, 1};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].n == 0) ++p;
        if (p == n) {
            adj.assign(n, std::vector<std::int64_t>(n, 0));  // singular; adjugate unused
            return 0;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            det.n = -det.n;
        }
        det = mul(det, a[c][c]);
        const Frac piv = a[c][c];
        for (auto& x : a[c]) x = div(x, piv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].n == 0) continue;
            const Frac f = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = sub(a[r][k], mul(f, a[c][k]));
        }
    }
    if (det.d != 1) throw std::logic_error("non-integral determinant");
    adj.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Frac v = mul(a[i][n + j], det);
            if (v.d != 1) throw std::logic_error("non-integral adjugate");
            adj[i][j] = static_cast<std::int64_t>(v.n);
        }
    return static_cast<std::int64_t>(det.n);
}

namespace {

int root_of_sum(const RootSystem& rs, const std::vector<int>& chain, std::size_t i, std::size_t j, int sign) {
    Root v(rs.rank(), 0);
    for (std::size_t k = i; k < j; ++k) v[chain[k] - 1] += sign;
    const int idx = rs.index_of(v);
    if (idx < 0) throw InvalidInput("simple roots do not form a chain");
    return idx;
}

}  // namespace

GenWord sl_word_on_chain(const RootSystem& rs, const std::vector<int>& chain, const IntMat& m0, const Ring& r) {
    const std::size_t n = chain.size() + 1;
    if (m0.size() != n) throw InvalidInput("matrix size does not match the chain");
    const auto& sc = StructureConstants::get(rs);
    // sign[i][j] (i<j): x_ij(t) -> x_{gamma_ij}(sign t), making the embedding a homomorphism
    std::vector<std::vector<int>> sign(n, std::vector<int>(n, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            const int nn = sc.N(root_of_sum(rs, chain, i, j - 1, 1), rs.simple(chain[j - 1]));
            if (nn != 1 && nn != -1) throw InvalidInput("chain is not simply laced");
            sign[i][j] = sign[i][j - 1] * nn;
        }
    IntMat m = m0;
    struct Op {
        std::size_t i, j;
        std::int64_t t;
    };
    std::vector<Op> ops;  // row_i += t row_j
    auto rowop = [&](std::size_t i, std::size_t j, std::int64_t t) {
        if (t == 0) return;
        for (std::size_t k = 0; k < n; ++k) m[i][k] += t * m[j][k];
        ops.push_back({i, j, t});
    };
    for (std::size_t c = 0; c < n; ++c) {
        for (;;) {
            std::size_t p = n;
            for (std::size_t i = c; i < n; ++i)
                if (m[i][c] != 0 && (p == n || std::llabs(m[i][c]) < std::llabs(m[p][c]))) p = i;
            if (p == n) throw InvalidInput("matrix is not in SL");
            bool done = true;
            for (std::size_t i = c; i < n; ++i) {
                if (i == p || m[i][c] == 0) continue;
                rowop(i, p, -(m[i][c] / m[p][c]));
                if (m[i][c] != 0) done = false;
            }
            if (!done) continue;
            if (p != c) {
                rowop(c, p, 1);
                rowop(p, c, -m[p][c] / m[c][c]);
            }
            break;
        }
        if (std::llabs(m[c][c]) != 1) throw InvalidInput("matrix is not in SL");
        for (std::size_t i = 0; i < n; ++i)
            if (i != c) rowop(i, c, -m[i][c] * m[c][c]);
    }
    GenWord w;
    for (const Op& op : ops) {
        // inverse of I + t E_ij
        const std::size_t lo = std::min(op.i, op.j), hi = std::max(op.i, op.j);
        const int root = root_of_sum(rs, chain, lo, hi, op.i < op.j ? 1 : -1);
        w.tokens.push_back({Tok::X, root, r.from_int(-op.t * sign[lo][hi])});
    }
    std::vector<std::size_t> minus;
    for (std::size_t i = 0; i < n; ++i)
        if (m[i][i] == -1) minus.push_back(i);
    if (minus.size() % 2) throw InvalidInput("matrix is not in SL");
    for (std::size_t k = 0; k < minus.size(); k += 2)
        w.tokens.push_back({Tok::H, root_of_sum(rs, chain, minus[k], minus[k + 1], 1), r.from_int(-1)});
    return w;
}

namespace {

IntMat gmo_matrix(int n) {
    IntMat g(n, std::vector<std::int64_t>(n, 0));
    int i = 0;
    if (n % 2) {
        // [[1,0,1],[1,1,0],[0,1,0]]
        g[0][0] = 1, g[0][2] = 1, g[1][0] = 1, g[1][1] = 1, g[2][1] = 1;
        i = 3;
    }
    for (; i < n; i += 2) g[i][i] = 1, g[i][i + 1] = -1, g[i + 1][i] = 1;
    return g;
}

}  // namespace

GMinusOne g_minus_one(int l) {
    if (l < 1) throw InvalidInput("g_minus_one needs l >= 1");
    const int n = l + 1;
    const auto& rs = RootSystem::get('A', l);
    std::vector<int> chain(l);
    std::iota(chain.begin(), chain.end(), 1);
    GMinusOne out;
    out.gmat = gmo_matrix(n);
    out.g = sl_word_on_chain(rs, chain, out.gmat, Ring::integers());
    IntMat b = out.gmat;
    for (int i = 0; i < n; ++i) b[i][i] -= 1;
    IntMat adj;
    const std::int64_t d = int_adjugate(b, adj);
    if (d != 1 && d != -1) throw std::logic_error("g - 1 is not unimodular");
    for (auto& row : adj)
        for (auto& x : row) x *= d;
    out.inv_g_minus_1 = adj;
    return out;
}

GenWord g_minus_one_on_chain(const RootSystem& rs, const std::vector<int>& chain, const Ring& r) {
    return sl_word_on_chain(rs, chain, gmo_matrix(static_cast<int>(chain.size()) + 1), r);
}

LayerSolver::LayerSolver(const RootSystem& rs, const GenWord& g_int, std::vector<std::vector<int>> layers)
    : rs_(rs), layers_(std::move(layers)) {
    for (const auto& l : layers_) order_.insert(order_.end(), l.begin(), l.end());
    const Ring z = Ring::integers();
    const GenWord gi = inverse(g_int, z);
    for (const auto& layer : layers_) {
        const std::size_t n = layer.size();
        IntMat b(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t c = 0; c < n; ++c) {
            const UnipotentVector v = collect_value(rs_, g_int * GenWord::x(layer[c], z.one()) * gi, order_, z);
            for (std::size_t i = 0; i < n; ++i) b[i][c] = v.coeff(layer[i], z).v;
            b[c][c] -= 1;
        }
        IntMat adj;
        det_.push_back(int_adjugate(b, adj));
        adj_.push_back(std::move(adj));
    }
}

std::vector<Elem> LayerSolver::residual(const GenWord& g_r, const GenWord& theta, const GenWord& y, std::size_t k,
                                        const Ring& r) const {
    const UnipotentVector v = collect_value(rs_, inverse(commutator(g_r, y, r), r) * theta, order_, r);
    std::vector<Elem> d;
    for (int a : layers_[k]) d.push_back(v.coeff(a, r));
    return d;
}

bool LayerSolver::solve(const GenWord& g_r, const GenWord& theta, GenWord& y, const Ring& r, std::size_t first,
                        std::size_t last) const {
    last = std::min(last, layers_.size());
    bool ok = true;
    for (std::size_t k = first; k < last; ++k) {
        const std::vector<Elem> d = residual(g_r, theta, y, k, r);
        const std::size_t n = d.size();
        if (std::all_of(d.begin(), d.end(), [&](Elem e) { return r.is_zero(e); })) continue;
        if (det_[k] == 0) {
            ok = false;
            continue;
        }
        const Elem det = r.from_int(det_[k]);
        for (std::size_t i = 0; i < n; ++i) {
            Elem s = r.zero();
            for (std::size_t j = 0; j < n; ++j) s = r.add(s, r.mul(r.from_int(adj_[k][i][j]), d[j]));
            auto q = r.divide(s, det);
            if (!q) {
                ok = false;
                break;
            }
            if (!r.is_zero(*q)) y.tokens.push_back({Tok::X, layers_[k][i], *q});
        }
    }
    return ok;
}

}  // namespace chev
