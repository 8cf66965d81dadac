#include "chev/collect.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace chev {

GenWord UnipotentVector::word(const Ring& r) const {
    GenWord w;
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (!r.is_zero(coeffs[k])) w.tokens.push_back({Tok::X, roots[k], coeffs[k]});
    return w;
}

bool UnipotentVector::is_zero(const Ring& r) const {
    return std::all_of(coeffs.begin(), coeffs.end(), [&](const Elem& e) { return r.is_zero(e); });
}

Elem UnipotentVector::coeff(int root, const Ring& r) const {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k] == root) return coeffs[k];
    return r.zero();
}

std::vector<int> positive_functional(const RootSystem& rs, const RootSet& s) {
    const int l = rs.rank();
    std::vector<int> f(l, 0);
    bool all_pos = true, all_neg = true;
    for (int a : s) (rs.positive(a) ? all_neg : all_pos) = false;
    if (all_pos || all_neg) {
        std::fill(f.begin(), f.end(), all_pos ? 1 : -1);
        return f;
    }
    if (!rs.is_unipotent(s)) throw InvalidInput("root set is not unipotent");
    // perceptron; terminates because a strictly positive functional exists
    for (int round = 0; round < 100000; ++round) {
        bool ok = true;
        for (int a : s) {
            int v = 0;
            for (int j = 0; j < l; ++j) v += f[j] * rs.root(a)[j];
            if (v <= 0) {
                for (int j = 0; j < l; ++j) f[j] += rs.root(a)[j];
                ok = false;
            }
        }
        if (ok) return f;
    }
    throw std::logic_error("no positive functional found");
}

namespace {

// integers b with sum_j b_j coroot(a)_j = 1
std::vector<int> coroot_bezout(const RootSystem& rs, int a) {
    const auto& co = rs.coroot(a);
    std::vector<int> b(co.size(), 0);
    for (std::size_t j = 0; j < co.size(); ++j)
        if (co[j] == 1 || co[j] == -1) {
            b[j] = co[j];
            return b;
        }
    // extended gcd folded over the entries
    int g = 0;
    for (std::size_t j = 0; j < co.size(); ++j) {
        if (!co[j]) continue;
        int x0 = 1, x1 = 0, r0 = g, r1 = co[j], y0 = 0, y1 = 1;
        // solve x*g + y*co[j] = gcd
        while (r1) {
            int q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
        }
        if (r0 < 0) r0 = -r0, x0 = -x0, y0 = -y0;
        for (auto& v : b) v *= x0;
        b[j] = y0;
        g = r0;
    }
    if (g != 1) throw std::logic_error("coroot is not primitive");
    return b;
}

}  // namespace

UnipotentVector collect_value(const RootSystem& rs, const GenWord& w, const std::vector<int>& order, const Ring& r) {
    UnipotentVector out;
    out.roots = order;
    out.coeffs.assign(order.size(), r.zero());
    if (order.empty()) return out;
    const Rep& ad = Rep::get(rs, RepKind::Adjoint);
    const auto& sc = StructureConstants::get(rs);
    const RootSet set(order.begin(), order.end());
    const auto f = positive_functional(rs, RootSet(set));
    auto grade = [&](int a) {
        int v = 0;
        for (int j = 0; j < rs.rank(); ++j) v += f[j] * rs.root(a)[j];
        return v;
    };
    std::set<int> grades;
    for (int a : order) grades.insert(grade(a));
    std::vector<Elem> vec(ad.dim());
    for (int g : grades) {
        // prefix of everything of lower grade, in the requested order
        GenWord prefix;
        for (std::size_t k = 0; k < order.size(); ++k)
            if (grade(order[k]) < g && !r.is_zero(out.coeffs[k])) prefix.tokens.push_back({Tok::X, order[k], out.coeffs[k]});
        GenWord rest = inverse(prefix, r) * w;
        rest.center = 1;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const int a = order[k];
            if (grade(a) != g) continue;
            std::fill(vec.begin(), vec.end(), r.zero());
            vec[sc.adjoint_index_of_root(rs.neg(a))] = r.one();
            ad.apply_word_vec(vec, rest, r);
            // h-component is c * coroot(a); coroot entries are coprime
            const auto bz = coroot_bezout(rs, a);
            Elem c = r.zero();
            for (int j = 0; j < rs.rank(); ++j)
                if (bz[j]) c = r.add(c, r.mul(r.from_int(bz[j]), vec[sc.adjoint_index_of_h(j)]));
            out.coeffs[k] = c;
        }
    }
    return out;
}

UnipotentVector collect_unipotent(const RootSystem& rs, const GenWord& w, const std::vector<int>& order, const Ring& r) {
    const RootSet set = [&] {
        RootSet s(order.begin(), order.end());
        std::sort(s.begin(), s.end());
        return s;
    }();
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw InvalidInput("order repeats a root");
    if (!rs.is_closed(set) || !rs.is_unipotent(set)) throw InvalidInput("collection set must be closed and unipotent");
    for (const Token& t : w.tokens)
        if (t.kind != Tok::X || !std::binary_search(set.begin(), set.end(), t.root))
            throw InvalidInput("token outside the collection set: " + rs.root_str(t.root));
    if (w.center != 1) throw InvalidInput("central sign in a unipotent word");
    return collect_value(rs, w, order, r);
}

bool acts_trivially_adjoint(const RootSystem& rs, const GenWord& w, const Ring& r) {
    const Rep& ad = Rep::get(rs, RepKind::Adjoint);
    GenWord v = w;
    v.center = 1;
    std::vector<Elem> vec(ad.dim());
    for (int b = 0; b < ad.dim(); ++b) {
        std::fill(vec.begin(), vec.end(), r.zero());
        vec[b] = r.one();
        ad.apply_word_vec(vec, v, r);
        for (int i = 0; i < ad.dim(); ++i)
            if (vec[i] != (i == b ? r.one() : r.zero())) return false;
    }
    return true;
}

const std::vector<CommutatorTerm>& commutator_terms(const RootSystem& rs, int a, int b) {
    static std::mutex mu;
    static std::map<std::tuple<const RootSystem*, int, int>, std::vector<CommutatorTerm>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({&rs, a, b});
        if (it != cache.end()) return it->second;
    }
    if (a == rs.neg(b)) throw InvalidInput("commutator of opposite roots is not unipotent");
    std::vector<CommutatorTerm> terms;
    for (int s = 2; s <= 5; ++s)
        for (int i = 1; i < s; ++i) {
            const int j = s - i;
            Root g(rs.rank());
            for (int k = 0; k < rs.rank(); ++k) g[k] = i * rs.root(a)[k] + j * rs.root(b)[k];
            const int idx = a == b ? -1 : rs.index_of(g);
            if (idx >= 0) terms.push_back({i, j, idx, 0});
        }
    if (!terms.empty()) {
        Ring z = Ring::integers();
        GenWord c = commutator(GenWord::x(a, z.one()), GenWord::x(b, z.one()), z);
        std::vector<int> order;
        for (const auto& t : terms) order.push_back(t.root);
        UnipotentVector v = collect_value(rs, c, order, z);
        for (std::size_t k = 0; k < terms.size(); ++k) terms[k].c = v.coeffs[k].v;
        terms.erase(std::remove_if(terms.begin(), terms.end(), [](const CommutatorTerm& t) { return t.c == 0; }), terms.end());
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_tuple(&rs, a, b), std::move(terms)).first->second;
}

GenWord chevalley_commutator(const RootSystem& rs, int a, int b, Elem t, Elem u, const Ring& r) {
    GenWord out;
    for (const auto& term : commutator_terms(rs, a, b)) {
        Elem v = r.mul(r.mul(r.pow(t, term.i), r.pow(u, term.j)), r.from_int(term.c));
        if (!r.is_zero(v)) out.tokens.push_back({Tok::X, term.root, v});
    }
    return out;
}

}  // namespace chev
