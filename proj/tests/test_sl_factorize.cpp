#include <doctest.h>

#include <random>

#include "chev/sl_factorize.hpp"

using namespace chev;

namespace {

Matrix random_sl(int n, const Ring& r, std::mt19937_64& g) {
    Matrix m = Matrix::identity(r, n);
    for (int s = 0; s < 4 * n * n; ++s) {
        const int i = static_cast<int>(g() % n), j = static_cast<int>(g() % n);
        if (i == j) continue;
        const Elem c = r.element(static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(r.size())));
        for (int k = 0; k < n; ++k) m.at(i, k) = r.add(m.at(i, k), r.mul(c, m.at(j, k)));
    }
    // a torus factor diag(u, u^-1)
    Elem u = r.one();
    for (int t = 0; t < 20; ++t) {
        const Elem e = r.element(static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(r.size())));
        if (r.is_unit(e)) u = e;
    }
    const int i = static_cast<int>(g() % n);
    const int j = (i + 1) % n;
    for (int k = 0; k < n; ++k) {
        m.at(i, k) = r.mul(u, m.at(i, k));
        m.at(j, k) = r.mul(r.inv(u), m.at(j, k));
    }
    return m;
}

bool shape_ok(const RootSystem& rs, const GenWord& w, bool positive) {
    for (const Token& t : w.tokens)
        if (t.kind != Tok::X || rs.positive(t.root) != positive) return false;
    return true;
}

}  // namespace

TEST_CASE("factor_sl round trip") {
    std::mt19937_64 gen(31);
    for (const Ring& r : {Ring::prime_field(5), Ring::zmod(6), Ring::zmod(9), Ring::zmod(25), Ring::boolean(3), Ring::prime_field(2)}) {
        for (int n = 2; n <= 6; ++n) {
            const auto& rs = RootSystem::get('A', n - 1);
            const Rep& nat = Rep::get(rs, RepKind::NaturalA);
            for (int t = 0; t < 6; ++t) {
                const Matrix g = random_sl(n, r, gen);
                const Quadruple q = factor_sl(g);
                INFO(r.name() << " n=" << n);
                CHECK(nat.eval(q.u1, r) * nat.eval(q.v1, r) * nat.eval(q.u2, r) * nat.eval(q.v2, r) == g);
                CHECK(shape_ok(rs, q.u1, true));
                CHECK(shape_ok(rs, q.u2, true));
                CHECK(shape_ok(rs, q.v1, false));
                CHECK(shape_ok(rs, q.v2, false));
            }
        }
    }
}

TEST_CASE("factor_sl examples and errors") {
    const Ring f5 = Ring::prime_field(5);
    const Quadruple id = factor_sl(Matrix::identity(f5, 3));
    CHECK(id.u1.empty());
    CHECK(id.v1.empty());
    CHECK(id.u2.empty());
    CHECK(id.v2.empty());

    const Matrix up = Matrix::from_ints(f5, {{1, 2, 3}, {0, 1, 4}, {0, 0, 1}});
    const Quadruple qu = factor_sl(up);
    CHECK(qu.v1.empty());
    CHECK(qu.u2.empty());
    CHECK(qu.v2.empty());
    CHECK(Rep::get(RootSystem::get('A', 2), RepKind::NaturalA).eval(qu.u1, f5) == up);

    const Ring z = Ring::integers();
    CHECK_THROWS_AS(factor_sl(Matrix::from_ints(z, {{3, 7}, {2, 5}})), RingCapabilityError);
    CHECK_THROWS_AS(factor_sl(Matrix::from_ints(z, {{3, 7}, {2, 5}})), NoWitness);
    CHECK_THROWS_AS(factor_sl(Matrix::from_ints(f5, {{2, 0}, {0, 2}})), DeterminantNotOne);
    CHECK_THROWS_AS(factor_sl(Matrix::from_ints(f5, {{1, 0, 0}, {0, 1, 0}})), InvalidInput);
}

TEST_CASE("decompose_matrix") {
    std::mt19937_64 gen(6);
    for (const Ring& r : {Ring::zmod(9), Ring::prime_field(5), Ring::boolean(2)}) {
        for (int n = 3; n <= 6; ++n) {
            const Matrix g = random_sl(n, r, gen);
            const Decomposition d = decompose_matrix(g);
            CHECK(d.pairs.size() <= 3);
            const auto& rs = RootSystem::get('A', n - 1);
            const Rep& nat = Rep::get(rs, RepKind::NaturalA);
            CHECK(nat.eval(d.product(r), r) == g);
        }
    }
}
