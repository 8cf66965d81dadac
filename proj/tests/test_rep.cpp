#include <doctest.h>

#include <random>

#include "chev/rep.hpp"

using namespace chev;

namespace {

Elem rnd(const Ring& r, std::mt19937_64& g) { return r.element(static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(r.size()))); }

Elem rnd_unit(const Ring& r, std::mt19937_64& g) {
    for (;;) {
        Elem e = rnd(r, g);
        if (r.is_unit(e)) return e;
    }
}

}  // namespace

TEST_CASE("every supported module satisfies the bracket relations") {
    const char* labels[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7"};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        for (RepKind k : Rep::supported(rs)) {
            const Rep& rep = Rep::get(rs, k);
            INFO(lab << " " << rep.tag());
            CHECK(rep.relation_failures() == 0);
        }
    }
    CHECK(Rep::get(RootSystem::parse("E7"), RepKind::Minuscule).dim() == 56);
    CHECK(Rep::get(RootSystem::parse("E6"), RepKind::Minuscule).dim() == 27);
    CHECK(Rep::get(RootSystem::parse("E8"), RepKind::Adjoint).dim() == 248);
    CHECK(Rep::get(RootSystem::parse("B3"), RepKind::VectorB).dim() == 7);
    CHECK_THROWS_AS(Rep::get(RootSystem::parse("F4"), RepKind::Minuscule), UnsupportedRep);
    CHECK_THROWS_AS(Rep::get(RootSystem::parse("E8"), RepKind::Minuscule), UnsupportedRep);
}

TEST_CASE("elementary matrices in the natural module") {
    const auto& a2 = RootSystem::parse("A2");
    Ring z7 = Ring::zmod(7);
    const Rep& rep = Rep::get(a2, RepKind::NaturalA);
    Matrix m = rep.eval(GenWord::x(a2.simple(1), z7.from_int(3)), z7);
    CHECK(m == Matrix::from_ints(z7, {{1, 3, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(rep.eval(GenWord::x(a2.simple(2), z7.zero()), z7).is_identity());
    CHECK(rep.eval(GenWord{}, z7).is_identity());

    const auto& a1 = RootSystem::parse("A1");
    Ring z = Ring::integers();
    const Rep& r1 = Rep::get(a1, RepKind::NaturalA);
    GenWord w = GenWord::w(0, z.one());
    CHECK(r1.eval(w, z) == Matrix::from_ints(z, {{0, 1}, {-1, 0}}));
    CHECK(r1.eval(w * w * w * w, z).is_identity());
    CHECK(r1.eval(w * w, z).is_scalar_sign(-1));
    Ring f5 = Ring::prime_field(5);
    GenWord h = GenWord::h(0, f5.from_int(2)) * GenWord::h(0, f5.from_int(3));
    CHECK(r1.eval(h, f5).is_identity());
    CHECK(r1.eval(GenWord::h(0, f5.from_int(2)), f5) == Matrix::from_ints(f5, {{2, 0}, {0, 3}}));
    GenWord c;
    c.center = -1;
    CHECK(r1.eval(c, f5).is_scalar_sign(-1));
    CHECK_THROWS_AS(Rep::get(RootSystem::parse("A2"), RepKind::NaturalA).eval(c, f5), InvalidInput);
}

TEST_CASE("token matrices agree with the dense exponential and with vector action") {
    std::mt19937_64 g(7);
    Ring r = Ring::zmod(9);
    const char* labels[] = {"B3", "C3", "D4", "G2", "F4", "E6"};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        for (RepKind k : Rep::supported(rs)) {
            const Rep& rep = Rep::get(rs, k);
            INFO(lab << " " << rep.tag());
            for (int trial = 0; trial < 4; ++trial) {
                const int a = static_cast<int>(g() % rs.num_roots());
                const Elem t = rnd(r, g);
                // oracle: I + tE + t^2 E^2/2 + ..., dense, over Z then reduced
                const int n = rep.dim();
                std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
                for (const auto& s : rep.e(a)) e[s.row][s.col] = s.val;
                Ring z = Ring::integers();
                Matrix E = Matrix::from_ints(z, e);
                Matrix term = Matrix::identity(z, n), sum = term;
                std::int64_t tv = t.v;
                for (int p = 1; p <= 4; ++p) {
                    term = (term * E).scaled(z.from_int(tv));
                    Matrix div(z, n, n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            REQUIRE(term.at(i, j).v % p == 0);
                            div.at(i, j) = z.from_int(term.at(i, j).v / p);
                        }
                    term = div;
                    sum = sum + term;
                }
                Matrix red(r, n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) red.at(i, j) = r.from_int(sum.at(i, j).v);
                CHECK(rep.eval(GenWord::x(a, t), r) == red);

                // random word: matrix columns == word applied to basis vectors
                GenWord w;
                for (int i = 0; i < 5; ++i) {
                    const int b = static_cast<int>(g() % rs.num_roots());
                    switch (g() % 3) {
                        case 0: w *= GenWord::x(b, rnd(r, g)); break;
                        case 1: w *= GenWord::w(b, rnd_unit(r, g)); break;
                        default: w *= GenWord::h(b, rnd_unit(r, g)); break;
                    }
                }
                Matrix m = rep.eval(w, r);
                const int col = static_cast<int>(g() % n);
                std::vector<Elem> v(n, r.zero());
                v[col] = r.one();
                rep.apply_word_vec(v, w, r);
                bool same = true;
                for (int i = 0; i < n; ++i) same = same && v[i] == m.at(i, col);
                CHECK(same);
                CHECK((m * rep.eval(inverse(w, r), r)).is_identity());
            }
        }
    }
}

TEST_CASE("Steinberg relations hold in matrices") {
    std::mt19937_64 g(11);
    Ring r = Ring::zmod(25);
    const char* labels[] = {"A3", "C3", "G2", "F4"};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        const Rep& rep = Rep::get(rs, Rep::default_kind(rs));
        for (int trial = 0; trial < 20; ++trial) {
            const int a = static_cast<int>(g() % rs.num_roots());
            Elem s = rnd(r, g), t = rnd(r, g);
            // additivity
            CHECK(rep.eval(GenWord::x(a, s) * GenWord::x(a, t), r) == rep.eval(GenWord::x(a, r.add(s, t)), r));
            // h_a(u) x_b(t) h_a(u)^-1 = x_b(u^<b,a> t)
            const int b = static_cast<int>(g() % rs.num_roots());
            Elem u = rnd_unit(r, g);
            const int p = rs.pairing(b, a);
            Elem f = r.pow(p >= 0 ? u : r.inv(u), p >= 0 ? p : -p);
            CHECK(rep.eval(conjugate(GenWord::h(a, u), GenWord::x(b, t), r), r) == rep.eval(GenWord::x(b, r.mul(f, t)), r));
            // w_a(u) = w_a(1) h_a(u)... multiplicativity of h
            Elem u2 = rnd_unit(r, g);
            CHECK(rep.eval(GenWord::h(a, u) * GenWord::h(a, u2), r) == rep.eval(GenWord::h(a, r.mul(u, u2)), r));
            CHECK(rep.eval(GenWord::w(a, u) * GenWord::w(a, r.neg(r.one())), r) == rep.eval(GenWord::h(a, u), r));
        }
    }
}
