#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "chev/ring.hpp"
#include "chev/root_system.hpp"

using namespace chev;

namespace {

// Independent oracle: orbit of the simple roots under simple reflections, computed
// from the Cartan matrix alone (every root is W-conjugate to a simple root).
std::set<Root> reflection_closure(const RootSystem& rs) {
    const int l = rs.rank();
    std::set<Root> out;
    std::vector<Root> todo;
    for (int i = 0; i < l; ++i) {
        Root r(l, 0);
        r[i] = 1;
        todo.push_back(r);
    }
    while (!todo.empty()) {
        Root r = todo.back();
        todo.pop_back();
        if (!out.insert(r).second) continue;
        for (int k = 0; k < l; ++k) {
            int p = 0;
            for (int j = 0; j < l; ++j) p += r[j] * rs.cartan(j, k);
            Root s = r;
            s[k] -= p;
            todo.push_back(s);
        }
    }
    return out;
}

const std::vector<std::pair<char, int>> kAll{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'B', 2},
                                             {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5},
                                             {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

Root vec(std::initializer_list<int> xs) { return Root(xs); }

}  // namespace

TEST_CASE("roots match the reflection-closure oracle") {
    for (auto [t, l] : kAll) {
        const RootSystem& rs = RootSystem::get(t, l);
        auto oracle = reflection_closure(rs);
        std::set<Root> mine;
        for (int a = 0; a < rs.num_roots(); ++a) mine.insert(rs.root(a));
        CHECK_MESSAGE(mine == oracle, rs.label());
        CHECK(rs.num_roots() == rs.coxeter_number() * l);
    }
}

TEST_CASE("build examples") {
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(a2.num_positive() == 3);
    CHECK(a2.root(0) == vec({1, 0}));
    CHECK(a2.root(1) == vec({0, 1}));
    CHECK(a2.root(2) == vec({1, 1}));
    const RootSystem& g2 = RootSystem::get('G', 2);
    CHECK(g2.num_positive() == 6);
    CHECK(g2.coxeter_number() == 6);
    CHECK(g2.root(g2.highest()) == vec({3, 2}));
    CHECK_THROWS_AS(RootSystem::get('B', 1), InvalidInput);
    CHECK_THROWS_AS(RootSystem::get('E', 9), InvalidInput);
    CHECK(RootSystem::get('E', 8).num_positive() == 120);
    CHECK(RootSystem::get('E', 7).coxeter_number() == 18);
    CHECK(RootSystem::get('F', 4).root(RootSystem::get('F', 4).highest()) == vec({2, 3, 4, 2}));
}

TEST_CASE("pairing equals r - q of the root string") {
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(a2.pairing(a2.simple(1), a2.simple(2)) == -1);
    const RootSystem& b2 = RootSystem::get('B', 2);
    CHECK(b2.pairing(b2.simple(1), b2.simple(2)) != b2.pairing(b2.simple(2), b2.simple(1)));
    for (auto [t, l] : kAll) {
        const RootSystem& rs = RootSystem::get(t, l);
        for (int a = 0; a < rs.num_roots(); ++a) {
            CHECK(rs.pairing(a, a) == 2);
            for (int b = 0; b < rs.num_roots(); ++b) {
                if (b == a || b == rs.neg(a)) continue;
                auto [r, q] = rs.string(b, a);
                CHECK(rs.pairing(b, a) == r - q);
            }
        }
    }
}

TEST_CASE("sigma_k and delta_k") {
    const RootSystem& a2 = RootSystem::get('A', 2);
    auto s = a2.sigma_k(2);
    CHECK(s == RootSet{1, 2});
    for (auto [t, l] : kAll) {
        const RootSystem& rs = RootSystem::get(t, l);
        for (int k = 1; k <= l; ++k) {
            CHECK(rs.is_symmetric(rs.delta_k(k)));
            CHECK(rs.is_closed(rs.delta_k(k)));
            CHECK(rs.is_unipotent(rs.sigma_k(k)));
            CHECK(rs.is_closed(rs.sigma_k(k)));
        }
    }
}

TEST_CASE("closedness examples") {
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(a2.is_closed(a2.positive_roots()));
    CHECK(a2.is_closed({a2.simple(1)}));
    CHECK_FALSE(a2.is_closed({a2.simple(1), a2.simple(2)}));
}

TEST_CASE("weyl action") {
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(a2.weyl_act({1}, a2.simple(1)) == a2.neg(a2.simple(1)));
    CHECK(a2.root(a2.weyl_act({1}, a2.simple(2))) == vec({1, 1}));
    CHECK(a2.weyl_act({}, a2.simple(2)) == a2.simple(2));
    for (auto [t, l] : kAll) {
        const RootSystem& rs = RootSystem::get(t, l);
        auto w0 = rs.longest_word();
        // longest element sends every positive root to a negative one
        auto p = rs.weyl_perm(w0);
        for (int a = 0; a < rs.num_positive(); ++a) CHECK_FALSE(rs.positive(p[a]));
        CHECK(static_cast<int>(w0.size()) == rs.num_positive());
        CHECK(rs.reduced_word(p).size() == w0.size());
        CHECK(rs.weyl_perm(rs.reduced_word(p)) == p);
    }
}

TEST_CASE("pi_word table") {
    CHECK(RootSystem::get('A', 3).pi_word() == WeylWord{1, 2, 3});
    CHECK(RootSystem::get('D', 4).pi_word() == WeylWord{4, 3, 2, 1});
    CHECK(RootSystem::get('G', 2).pi_word() == WeylWord{2, 1});
    CHECK(RootSystem::get('E', 6).pi_word() == WeylWord{1, 3, 4, 5, 6});
    CHECK(RootSystem::get('E', 7).pi_word() == WeylWord{1, 3, 2, 4, 5, 6, 7});
    CHECK(RootSystem::get('F', 4).pi_word() == WeylWord{1, 2, 3, 4});
}

TEST_CASE("omega/theta partitions for the distinguished element") {
    for (auto [t, l] : kAll) {
        if (l < 2) continue;
        const RootSystem& rs = RootSystem::get(t, l);
        auto part = rs.omega_theta(rs.pi_word());
        bool e6 = t == 'E' && l == 6;
        // for E6 the element is a Coxeter element of the A5 subsystem only
        CHECK_MESSAGE(static_cast<int>(part.omega[0].size()) == (e6 ? 5 : l), rs.label());
        if (e6)
            CHECK(part.theta == rs.sigma_k(2));
        else
            CHECK(part.theta.empty());
        auto sigma = rs.companion_sigma();
        CHECK(rs.is_closed(sigma));
        CHECK(rs.is_unipotent(sigma));
        if (!e6) CHECK(static_cast<int>(sigma.size()) == l);
    }
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(a2.companion_sigma() == a2.sigma_k(2));
    // C_l: m_l = 1 and m_{l-1} <= 1
    const RootSystem& c4 = RootSystem::get('C', 4);
    RootSet expect;
    for (int a = 0; a < c4.num_positive(); ++a)
        if (c4.coeff(a, 4) == 1 && c4.coeff(a, 3) <= 1) expect.push_back(a);
    CHECK(c4.companion_sigma() == expect);
    CHECK(RootSystem::get('B', 3).companion_sigma().size() == 3);
}

TEST_CASE("omega/theta invariants for random Weyl words") {
    std::mt19937_64 rng(11);
    for (auto [t, l] : kAll) {
        const RootSystem& rs = RootSystem::get(t, l);
        for (int it = 0; it < 20; ++it) {
            WeylWord w;
            int len = static_cast<int>(rng() % 12);
            for (int i = 0; i < len; ++i) w.push_back(1 + static_cast<int>(rng() % l));
            auto part = rs.omega_theta(w);
            std::vector<int> seen(rs.num_positive(), 0);
            for (auto& om : part.omega)
                for (int a : om) ++seen[a];
            for (int a : part.theta) ++seen[a];
            CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
            CHECK(rs.is_closed(part.theta));
        }
        if (l < 2) continue;
        // cumulative unions are closed for the distinguished element
        auto part = rs.omega_theta(rs.pi_word());
        RootSet acc = part.theta;
        for (auto& om : part.omega) {
            acc.insert(acc.end(), om.begin(), om.end());
            std::sort(acc.begin(), acc.end());
            CHECK(rs.is_closed(acc));
        }
    }
}

TEST_CASE("cumulative unions are not closed for every Weyl element") {
    // B3, w = s3 s2 s3 s1: a root can leave the positive cone and come back,
    // so Theta + Omega_0..Omega_n fails to be closed for some n.
    const RootSystem& rs = RootSystem::get('B', 3);
    auto part = rs.omega_theta({3, 2, 3, 1});
    RootSet acc = part.theta;
    bool all_closed = true;
    for (auto& om : part.omega) {
        acc.insert(acc.end(), om.begin(), om.end());
        std::sort(acc.begin(), acc.end());
        all_closed = all_closed && rs.is_closed(acc);
    }
    CHECK_FALSE(all_closed);
}

TEST_CASE("coxeter orbits have size h") {
    for (auto [t, l] : kAll) {
        if (l < 2 || (t == 'E' && l == 6)) continue;
        const RootSystem& rs = RootSystem::get(t, l);
        auto p = rs.weyl_perm(rs.pi_word());
        for (int a = 0; a < rs.num_roots(); ++a) {
            int n = 1;
            for (int c = p[a]; c != a; c = p[c]) ++n;
            CHECK(n == rs.coxeter_number());
        }
    }
}
