#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "chev/comm_decomp.hpp"

namespace chev {

namespace {

int root_of(const RootSystem& rs, const Root& v) {
    const int i = rs.index_of(v);
    if (i < 0) throw std::logic_error("expected a root");
    return i;
}

// found by search: det(A - 1) = +-1 on the respective E6 modules
struct Letter {
    int k, sign, t;
};
const std::vector<Letter> kE6Wedge = {{3, 1, 1}, {5, 1, 1}, {5, -1, -1}, {4, -1, -1}, {1, 1, 1}, {3, -1, -1}, {4, 1, -1}};
const std::vector<Letter> kE6Spin = {{4, 1, -1}, {3, 1, -1}, {5, -1, -1}, {5, 1, -1}, {2, 1, -1}, {4, -1, 1}, {2, -1, -1}};

GenWord letters(const RootSystem& rs, const std::vector<Letter>& ls, const Ring& r) {
    GenWord w;
    for (const Letter& l : ls) {
        const int a = l.sign > 0 ? rs.simple(l.k) : rs.neg(rs.simple(l.k));
        w.tokens.push_back({Tok::X, a, r.from_int(l.t)});
    }
    return w;
}

// One engine instance: g (as a function of the ring) and the layered set it acts on.
struct Part {
    std::vector<std::vector<int>> layers;
    std::function<GenWord(const Ring&)> g;
    std::unique_ptr<LayerSolver> solver;
};

GenWord chains_g(const RootSystem& rs, const std::vector<std::vector<int>>& chains, const Ring& r) {
    GenWord g;
    for (const auto& c : chains) g *= g_minus_one_on_chain(rs, c, r);
    return g;
}

std::vector<int> roots_where(const RootSystem& rs, const std::function<bool(int)>& keep) {
    std::vector<int> out;
    for (int a = 0; a < rs.num_positive(); ++a)
        if (keep(a)) out.push_back(a);
    return out;
}

// Levi chain acting on sigma minus the single extra root (or everything for type A / E6 parts)
struct Plan {
    int extra = -1;           // root split off by a single commutator
    int extra_p = -1, extra_q = -1;
    bool extra_vary_p = true;  // which side of [x_p, x_q] carries the parameter
    std::vector<Part> parts;   // applied in order; each removes its layers from the target
};

Part make_part(const RootSystem& rs, std::vector<std::vector<int>> layers, std::function<GenWord(const Ring&)> g) {
    Part p;
    p.layers = std::move(layers);
    p.g = std::move(g);
    p.solver = std::make_unique<LayerSolver>(rs, p.g(Ring::integers()), p.layers);
    for (std::size_t k = 0; k < p.layers.size(); ++k)
        if (rs.type() != 'G' || k != 1)
            if (p.solver->det(k) != 1 && p.solver->det(k) != -1)
                throw std::logic_error("Levi element has eigenvalue 1 on a layer of " + rs.label());
    return p;
}

Plan build_plan(const RootSystem& rs) {
    const int l = rs.rank();
    const char ty = rs.type();
    const RootSet sigma = rs.companion_sigma();
    auto chain = [](int a, int b) {
        std::vector<int> c;
        for (int k = a; k <= b; ++k) c.push_back(k);
        return c;
    };
    auto minus = [&](int drop) {
        std::vector<int> out;
        for (int a : sigma)
            if (a != drop) out.push_back(a);
        return out;
    };
    Plan p;
    auto chain_part = [&](std::vector<int> set, std::vector<int> levi) {
        p.parts.push_back(make_part(rs, {set}, [&rs, levi](const Ring& r) { return chains_g(rs, {levi}, r); }));
    };
    Root v(l, 0);
    switch (ty) {
        case 'A':
            chain_part(std::vector<int>(sigma.begin(), sigma.end()), chain(1, l - 1));
            break;
        case 'B':
            // [x_{a_{l-1}+a_l}(1), x_{-a_{l-1}}(s)] = x_{a_l}(+-s) x_{a_{l-1}+2a_l}(*)
            p.extra = rs.simple(l);
            v[l - 2] = 1, v[l - 1] = 1;
            p.extra_p = root_of(rs, v);
            p.extra_q = rs.neg(rs.simple(l - 1));
            p.extra_vary_p = false;
            if (l >= 3) chain_part(minus(p.extra), chain(1, l - 2));
            break;
        case 'C':
            // [x_{-a_{l-1}}(1), x_{2a_{l-1}+a_l}(s)] = x_{a_{l-1}+a_l}(*) x_{a_l}(+-s)
            p.extra = rs.simple(l);
            v[l - 2] = 2, v[l - 1] = 1;
            p.extra_p = rs.neg(rs.simple(l - 1));
            p.extra_q = root_of(rs, v);
            p.extra_vary_p = false;
            if (l >= 3) chain_part(minus(p.extra), chain(1, l - 2));
            break;
        case 'D': {
            // x_a(t) = [x_{a+a_{l-1}}(t), x_{-a_{l-1}}(1)], a = a_1 + ... + a_{l-2} + a_l
            for (int k = 0; k < l - 2; ++k) v[k] = 1;
            v[l - 1] = 1;
            p.extra = root_of(rs, v);
            v[l - 2] = 1;
            p.extra_p = root_of(rs, v);
            p.extra_q = rs.neg(rs.simple(l - 1));
            chain_part(minus(p.extra), chain(2, l - 1));
            break;
        }
        case 'E': {
            if (l == 6) {
                const auto wedge = roots_where(rs, [&](int a) { return rs.coeff(a, 6) == 0 && rs.coeff(a, 2) == 1; });
                const auto spin = roots_where(rs, [&](int a) { return rs.coeff(a, 6) == 1; });
                p.parts.push_back(make_part(rs, {wedge}, [&rs](const Ring& r) { return letters(rs, kE6Wedge, r); }));
                p.parts.push_back(make_part(rs, {spin}, [&rs](const Ring& r) { return letters(rs, kE6Spin, r); }));
                break;
            }
            // sigma minus a_2 + a_4 + ... + a_l is a chain under a_1, a_3, ..., a_{l-1}
            v[1] = 1;
            for (int k = 3; k < l; ++k) v[k] = 1;
            p.extra = root_of(rs, v);
            v[2] = 1;
            p.extra_p = root_of(rs, v);
            p.extra_q = rs.neg(rs.simple(3));
            std::vector<int> levi = {1};
            for (int k = 3; k < l; ++k) levi.push_back(k);
            chain_part(minus(p.extra), levi);
            break;
        }
        case 'F': {
            const auto lo = roots_where(rs, [&](int a) { return rs.coeff(a, 4) == 1 && rs.coeff(a, 1) == 0 && rs.coeff(a, 2) == 0; });
            const auto hi = roots_where(rs, [&](int a) { return rs.coeff(a, 4) == 2 && rs.coeff(a, 2) == 1; });
            p.parts.push_back(make_part(rs, {lo, hi}, [&rs](const Ring& r) { return chains_g(rs, {{3}, {1}}, r); }));
            break;
        }
        case 'G': {
            // the whole radical of the a_1 parabolic, graded by m_1; the middle layer needs the u-trick
            std::vector<std::vector<int>> layers(3);
            for (int a = 0; a < rs.num_positive(); ++a)
                if (rs.coeff(a, 1) >= 1) layers[rs.coeff(a, 1) - 1].push_back(a);
            p.parts.push_back(make_part(rs, layers, [&rs](const Ring& r) { return chains_g(rs, {{2}}, r); }));
            break;
        }
        default:
            throw InvalidInput("unsupported type");
    }
    return p;
}

const Plan& plan_for(const RootSystem& rs) {
    static std::mutex mu;
    static std::map<const RootSystem*, std::unique_ptr<Plan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[&rs];
    if (!slot) slot = std::make_unique<Plan>(build_plan(rs));
    return *slot;
}

bool is_identity_unipotent(const RootSystem& rs, const GenWord& w, const Ring& r) {
    return collect_value(rs, w, rs.positive_roots(), r).is_zero(r);
}

// [x_p(.), x_q(.)] carrying x_extra(a) and otherwise staying in U(sigma \ extra)
CommPair extra_pair(const RootSystem& rs, const Plan& p, Elem a, const Ring& r) {
    for (const auto& t : commutator_terms(rs, p.extra_p, p.extra_q)) {
        if (t.root != p.extra) continue;
        if ((p.extra_vary_p ? t.i : t.j) != 1) throw std::logic_error("extra root not linear in the parameter");
        auto s = r.divide(a, r.from_int(t.c));
        if (!s) throw std::logic_error("structure constant is not a unit");
        const Elem tp = p.extra_vary_p ? *s : r.one();
        const Elem tq = p.extra_vary_p ? r.one() : *s;
        return {GenWord::x(p.extra_p, tp), GenWord::x(p.extra_q, tq)};
    }
    throw std::logic_error("extra root missing from the commutator");
}

// x_target(b) as [x_d(1), y] for B2 (target a_1 + 2a_2) and C2 (target a_1 + a_2), needs 2 invertible
CommPair rank_two_pair(const RootSystem& rs, Elem b, const Ring& r) {
    const bool is_b = rs.type() == 'B';
    const int target = rs.index_of(is_b ? Root{1, 2} : Root{1, 1});
    const int d = rs.simple(is_b ? 2 : 1);
    const std::vector<int> ys = is_b ? std::vector<int>{rs.index_of({1, 1})} : std::vector<int>{rs.simple(2), rs.index_of({1, 1})};
    const std::vector<int> order = is_b ? std::vector<int>{target} : std::vector<int>{target, rs.index_of({2, 1})};
    const Ring z = Ring::integers();
    const std::size_t n = ys.size();
    IntMat m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        const auto v = collect_value(rs, commutator(GenWord::x(d, z.one()), GenWord::x(ys[c], z.one()), z), order, z);
        for (std::size_t i = 0; i < n; ++i) m[i][c] = v.coeff(order[i], z).v;
    }
    IntMat adj;
    const std::int64_t det = int_adjugate(m, adj);
    GenWord y;
    for (std::size_t i = 0; i < n; ++i) {
        // target vector is (b, 0, ...)
        auto q = r.divide(r.mul(r.from_int(adj[i][0]), b), r.from_int(det));
        if (!q) throw RingCapabilityError(rs.label() + " needs 2 to be invertible in " + r.name());
        y.tokens.push_back({Tok::X, ys[i], *q});
    }
    // with a zero-divisor determinant the coordinatewise quotient need not solve the system
    const auto got = collect_value(rs, commutator(GenWord::x(d, r.one()), y, r), order, r);
    for (std::size_t i = 0; i < n; ++i)
        if (got.coeff(order[i], r) != (i == 0 ? b : r.zero()))
            throw RingCapabilityError(rs.label() + " needs 2 to be invertible in " + r.name());
    return {GenWord::x(d, r.one()), y};
}

// G2: layers {a1, a1+a2}, {2a1+a2}, {3a1+a2, 3a1+2a2}; g acts trivially on the middle one, so g is
// perturbed by x_{a1}(s1) x_{a1+a2}(s2) to kill the middle residual.
CommPair g2_pair(const RootSystem& rs, const Part& part, const GenWord& theta, const Ring& r) {
    const LayerSolver& ls = *part.solver;
    const GenWord g = part.g(r);
    GenWord y;
    if (!ls.solve(g, theta, y, r, 0, 1)) throw std::logic_error("G2 first layer unsolvable");
    const Elem d0 = ls.residual(g, theta, y, 1, r)[0];
    GenWord gp = g;
    if (!r.is_zero(d0)) {
        const int b1 = rs.simple(1), b2 = rs.index_of({1, 1});
        const Elem l1 = r.sub(ls.residual(g * GenWord::x(b1, r.one()), theta, y, 1, r)[0], d0);
        const Elem l2 = r.sub(ls.residual(g * GenWord::x(b2, r.one()), theta, y, 1, r)[0], d0);
        const Elem nd = r.neg(d0);
        if (auto s = r.divide(nd, l1)) {
            gp *= GenWord::x(b1, *s);
        } else if (auto s2 = r.divide(nd, l2)) {
            gp *= GenWord::x(b2, *s2);
        } else if (auto s3 = r.divide(nd, r.add(l1, l2))) {
            gp *= GenWord::x(b1, *s3) * GenWord::x(b2, *s3);
        } else {
            throw RingCapabilityError("G2 needs 2 to be invertible in " + r.name());
        }
    }
    if (!ls.solve(gp, theta, y, r, 2, 3)) throw std::logic_error("G2 last layer unsolvable");
    return {gp, y};
}

}  // namespace

int sigma_commutator_bound(const RootSystem& rs) {
    switch (rs.type()) {
        case 'A':
        case 'F':
        case 'G':
            return 1;
        default:
            return 2;
    }
}

int commutator_width_bound(const RootSystem& rs) {
    switch (rs.type()) {
        case 'A':
        case 'F':
        case 'G':
            return 3;
        case 'E':
            return rs.rank() == 6 ? 5 : 4;
        default:
            return 4;
    }
}

std::vector<CommPair> sigma_to_commutators(const RootSystem& rs, const UnipotentVector& theta, const Ring& r) {
    if (rs.rank() < 2) throw InvalidInput("sigma_to_commutators needs rank >= 2");
    const RootSet sigma = rs.companion_sigma();
    for (std::size_t i = 0; i < theta.roots.size(); ++i)
        if (!r.is_zero(theta.coeffs[i]) && !std::binary_search(sigma.begin(), sigma.end(), theta.roots[i]))
            throw InvalidInput("theta is not supported on sigma");
    std::vector<CommPair> out;
    if (theta.is_zero(r)) return out;
    const Plan& plan = plan_for(rs);
    GenWord rest = theta.word(r);

    if (plan.extra >= 0) {
        std::vector<int> order = {plan.extra};
        for (int a : sigma)
            if (a != plan.extra) order.push_back(a);
        const Elem a = collect_value(rs, rest, order, r).coeff(plan.extra, r);
        if (!r.is_zero(a)) {
            CommPair c = extra_pair(rs, plan, a, r);
            rest = inverse(commutator(c.a, c.b, r), r) * rest;
            out.push_back(std::move(c));
        }
    }
    if ((rs.type() == 'B' || rs.type() == 'C') && rs.rank() == 2) {
        const int target = rs.type() == 'B' ? rs.index_of({1, 2}) : rs.index_of({1, 1});
        const Elem b = collect_value(rs, rest, {target}, r).coeff(target, r);
        if (!r.is_zero(b)) {
            CommPair c = rank_two_pair(rs, b, r);
            rest = inverse(commutator(c.a, c.b, r), r) * rest;
            out.push_back(std::move(c));
        }
    }
    for (const Part& part : plan.parts) {
        if (collect_value(rs, rest, part.solver->order(), r).is_zero(r)) continue;
        if (rs.type() == 'G') {
            CommPair c = g2_pair(rs, part, rest, r);
            rest = inverse(commutator(c.a, c.b, r), r) * rest;
            out.push_back(std::move(c));
            continue;
        }
        // later parts are normal in U(sigma); solve this part's layers only
        std::vector<int> mine = part.solver->order();
        std::vector<int> order = mine;
        for (int a : sigma)
            if (std::find(mine.begin(), mine.end(), a) == mine.end()) order.push_back(a);
        const UnipotentVector cv = collect_value(rs, rest, order, r);
        UnipotentVector head;
        for (std::size_t i = 0; i < cv.roots.size(); ++i)
            if (std::find(mine.begin(), mine.end(), cv.roots[i]) != mine.end()) {
                head.roots.push_back(cv.roots[i]);
                head.coeffs.push_back(cv.coeffs[i]);
            }
        if (head.is_zero(r)) continue;
        const GenWord g = part.g(r);
        GenWord y;
        if (!part.solver->solve(g, head.word(r), y, r)) throw std::logic_error("Levi layer unsolvable over " + r.name());
        CommPair c{g, y};
        rest = inverse(commutator(c.a, c.b, r), r) * rest;
        out.push_back(std::move(c));
    }
    if (!is_identity_unipotent(rs, rest, r)) throw std::logic_error("sigma_to_commutators left a residual in " + rs.label());
    return out;
}

}  // namespace chev
