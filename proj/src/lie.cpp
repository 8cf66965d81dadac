#include "chev/lie.hpp"

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace chev {

namespace {
constexpr int kUnknown = INT_MIN;

std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0) throw std::logic_error("structure constant division is not exact");
    return a / b;
}
}  // namespace

const StructureConstants& StructureConstants::get(const RootSystem& rs) {
    static std::mutex mu;
    static std::map<const RootSystem*, std::unique_ptr<StructureConstants>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[&rs];
    if (!slot) slot.reset(new StructureConstants(rs));
    return *slot;
}

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(rs) {
    const int nr = rs.num_roots();
    const int np = rs.num_positive();
    table_.assign(nr, std::vector<int>(nr, kUnknown));
    extraspecial_.assign(nr, {-1, -1});
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b)
            if (rs.sum(a, b) < 0) table_[a][b] = 0;

    for (int xi = 0; xi < np; ++xi) {
        if (rs.height(xi) < 2) continue;
        int ap = -1, bp = -1;
        for (int k = 1; k <= rs.rank() && ap < 0; ++k) {
            int rest = rs.sum(xi, rs.neg(rs.simple(k)));
            if (rest >= 0 && rs.positive(rest)) {
                ap = rs.simple(k);
                bp = rest;
            }
        }
        extraspecial_[xi] = {ap, bp};
        const int p = rs.string(bp, ap).first;
        table_[ap][bp] = p + 1;
        table_[bp][ap] = -(p + 1);
        const int n_neg = -(p + 1);  // N(-a', -b')
        for (int a = 0; a < np; ++a)
            for (int b = a + 1; b < np; ++b) {
                if (rs.sum(a, b) != xi || (a == ap && b == bp) || (a == bp && b == ap)) continue;
                // quadruple a + b + (-a') + (-b') = 0
                std::int64_t n2 = 0, d2 = 1, n3 = 0, d3 = 1;
                int g = rs.neg(ap), d = rs.neg(bp);
                int bg = rs.sum(b, g);
                if (bg >= 0) {
                    n2 = static_cast<std::int64_t>(general(b, g)) * general(a, d);
                    d2 = rs.norm2(bg);
                }
                int ga = rs.sum(g, a);
                if (ga >= 0) {
                    n3 = static_cast<std::int64_t>(general(g, a)) * general(b, d);
                    d3 = rs.norm2(ga);
                }
                std::int64_t num = -static_cast<std::int64_t>(rs.norm2(xi)) * (n2 * d3 + n3 * d2);
                int v = static_cast<int>(exact_div(num, d2 * d3 * n_neg));
                table_[a][b] = v;
                table_[b][a] = -v;
            }
    }
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) general(a, b);

    root_pos_.assign(nr, -1);
    for (int k = 0; k < np; ++k) {
        root_pos_[rs.neg(k)] = np - 1 - k;
        root_pos_[k] = np + rs.rank() + k;
    }
}

int StructureConstants::general(int a, int b) const {
    auto& self = const_cast<StructureConstants&>(*this);
    int& slot = self.table_[a][b];
    if (slot != kUnknown) return slot;
    const int s = rs_.sum(a, b);
    const bool pa = rs_.positive(a), pb = rs_.positive(b);
    int v;
    if (pa && pb) throw std::logic_error("positive structure constant requested before it was fixed");
    if (!pa && !pb) {
        v = -general(rs_.neg(a), rs_.neg(b));
    } else {
        // a + b + c = 0: N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b); pick the same-sign pair
        const int c = rs_.neg(s);
        const bool pc = rs_.positive(c);
        std::int64_t nc = rs_.norm2(c);
        if (pa == pc)
            v = static_cast<int>(exact_div(nc * general(c, a), rs_.norm2(b)));
        else
            v = static_cast<int>(exact_div(nc * general(b, c), rs_.norm2(a)));
    }
    slot = v;
    return v;
}

Sparse StructureConstants::ad(int a) const {
    Sparse m;
    const int nr = rs_.num_roots();
    for (int b = 0; b < nr; ++b) {
        int s = rs_.sum(a, b);
        if (s >= 0) {
            m.push_back({root_pos_[s], root_pos_[b], table_[a][b]});
        } else if (b == rs_.neg(a)) {
            const auto& co = rs_.coroot(a);
            for (int j = 0; j < rs_.rank(); ++j)
                if (co[j] != 0) m.push_back({adjoint_index_of_h(j), root_pos_[b], co[j]});
        }
    }
    for (int j = 0; j < rs_.rank(); ++j) {
        int p = rs_.pairing(a, rs_.simple(j + 1));
        if (p != 0) m.push_back({root_pos_[a], adjoint_index_of_h(j), -p});
    }
    return m;
}

int StructureConstants::jacobi_failures() const {
    const int n = adjoint_dim();
    const int nr = rs_.num_roots();
    std::vector<std::vector<std::vector<std::pair<int, std::int64_t>>>> cols(nr);
    for (int a = 0; a < nr; ++a) {
        cols[a].resize(n);
        for (const auto& e : ad(a)) cols[a][e.col].push_back({e.row, e.val});
    }
    // h_a acts diagonally: weight of a basis vector paired with a^vee
    auto h_apply = [&](int a, int k) -> std::int64_t {
        for (int b = 0; b < nr; ++b)
            if (root_pos_[b] == k) return rs_.pairing(b, a);
        return 0;
    };
    std::vector<std::int64_t> v1(n), v2(n);
    int failures = 0;
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            const int s = rs_.sum(a, b);
            for (int k = 0; k < n; ++k) {
                std::fill(v1.begin(), v1.end(), 0);
                for (auto [r, x] : cols[b][k])
                    for (auto [r2, y] : cols[a][r]) v1[r2] += x * y;
                for (auto [r, x] : cols[a][k])
                    for (auto [r2, y] : cols[b][r]) v1[r2] -= x * y;
                std::fill(v2.begin(), v2.end(), 0);
                if (s >= 0) {
                    for (auto [r, x] : cols[s][k]) v2[r] += table_[a][b] * x;
                } else if (b == rs_.neg(a)) {
                    v2[k] += h_apply(a, k);
                }
                if (v1 != v2) {
                    ++failures;
                    break;
                }
            }
        }
    return failures;
}

}  // namespace chev
