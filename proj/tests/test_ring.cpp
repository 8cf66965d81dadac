#include <doctest.h>

#include <numeric>
#include <random>

#include "chev/ring.hpp"

using namespace chev;

TEST_CASE("make_ring rejects bad descriptors") {
    CHECK_THROWS_AS(Ring::zmod(1), InvalidInput);
    CHECK_THROWS_AS(Ring::prime_field(6), InvalidInput);
    CHECK_THROWS_AS(Ring::parse("nope:3"), InvalidInput);
    CHECK(Ring::parse("zmod:9") == Ring::zmod(9));
    CHECK(Ring::parse(R"({"kind":"field_p","n":5})") == Ring::prime_field(5));
    CHECK(Ring::from_json(Ring::zmod(6).to_json()) == Ring::zmod(6));
    // short names round-trip through name()
    for (const Ring& r : {Ring::zmod(9), Ring::prime_field(5), Ring::boolean(1), Ring::boolean(3), Ring::integers(), Ring::rationals()})
        CHECK(Ring::parse(r.name()) == r);
    CHECK(Ring::parse("F5") == Ring::prime_field(5));
    CHECK(Ring::parse("F2^2") == Ring::boolean(2));
    CHECK_THROWS_AS(Ring::parse("F_3^2"), InvalidInput);
    CHECK_THROWS_AS(Ring::parse("Z/"), InvalidInput);
    CHECK_THROWS_AS(Ring::parse("Z/99999999999999999999999"), InvalidInput);
    CHECK_THROWS_AS(Ring::parse("F_6"), InvalidInput);
}

TEST_CASE("units of Z/6 are {1,5}") {
    Ring r = Ring::zmod(6);
    std::vector<std::int64_t> units;
    for (std::int64_t i = 0; i < 6; ++i)
        if (r.is_unit(r.from_int(i))) units.push_back(i);
    CHECK(units == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("every nonzero element of F_5 is a unit") {
    Ring r = Ring::prime_field(5);
    for (std::int64_t i = 1; i < 5; ++i) {
        Elem a = r.from_int(i);
        REQUIRE(r.is_unit(a));
        CHECK(r.is_one(r.mul(a, r.inv(a))));
    }
}

TEST_CASE("sr1 witness examples") {
    Ring z6 = Ring::zmod(6);
    CHECK(z6.sr1_witness(z6.from_int(2), z6.from_int(3)) == z6.from_int(1));
    Ring f7 = Ring::prime_field(7);
    CHECK(f7.sr1_witness(f7.zero(), f7.one()) == f7.one());
    Ring z = Ring::integers();
    CHECK_THROWS_AS(z.sr1_witness(z.from_int(5), z.from_int(7)), NoWitness);
    CHECK_THROWS_AS(z6.sr1_witness(z6.from_int(2), z6.from_int(4)), NotUnimodular);
}

TEST_CASE("sr1 witness exists for every unimodular pair of small Z/n") {
    for (std::int64_t n : {4, 6, 9, 12, 25}) {
        Ring r = Ring::zmod(n);
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                bool unimodular = std::gcd(std::gcd(a, b), n) == 1;
                if (!unimodular) {
                    CHECK_THROWS_AS(r.sr1_witness(r.from_int(a), r.from_int(b)), NotUnimodular);
                    continue;
                }
                Elem c = r.sr1_witness(r.from_int(a), r.from_int(b));
                CHECK(std::gcd((a + b * c.v) % n, n) == 1);
            }
    }
}

TEST_CASE("boolean ring F_2^3") {
    Ring r = Ring::boolean(3);
    CHECK(r.size() == 8);
    CHECK(r.one().v == 7);
    CHECK(r.is_unit(r.one()));
    CHECK_FALSE(r.is_unit(r.element(5)));
    // a + b c for every unimodular pair
    for (std::int64_t a = 0; a < 8; ++a)
        for (std::int64_t b = 0; b < 8; ++b) {
            if ((a | b) != 7) continue;
            Elem c = r.sr1_witness(r.element(a), r.element(b));
            CHECK(r.is_unit(r.add(r.element(a), r.mul(r.element(b), c))));
        }
    CHECK(r.add(r.one(), r.one()) == r.zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    std::vector<Ring> rings{Ring::zmod(6), Ring::zmod(9), Ring::prime_field(5), Ring::zmod(25), Ring::boolean(4),
                            Ring::integers(), Ring::rationals()};
    for (const Ring& r : rings) {
        auto rnd = [&]() {
            if (r.finite()) return r.element(static_cast<std::int64_t>(rng() % r.size()));
            if (r.kind() == RingKind::Rationals) {
                Elem a = r.from_int(static_cast<std::int64_t>(rng() % 41) - 20);
                return r.mul(a, r.inv(r.from_int(static_cast<std::int64_t>(rng() % 9) + 1)));
            }
            return r.from_int(static_cast<std::int64_t>(rng() % 41) - 20);
        };
        for (int it = 0; it < 200; ++it) {
            Elem a = rnd(), b = rnd(), c = rnd();
            CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
            CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
            CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
            CHECK(r.mul(a, b) == r.mul(b, a));
            CHECK(r.mul(a, r.one()) == a);
            CHECK(r.add(a, r.neg(a)) == r.zero());
            if (r.is_unit(b)) CHECK(r.mul(r.mul(a, b), r.inv(b)) == a);
            auto q = r.divide(r.mul(a, b), b);
            REQUIRE(q.has_value());
            CHECK(r.mul(*q, b) == r.mul(a, b));
        }
    }
}

TEST_CASE("bezout and row reduction") {
    Ring r = Ring::zmod(12);
    std::vector<Elem> row{r.from_int(4), r.from_int(6), r.from_int(9)};
    auto x = r.bezout(row);
    REQUIRE(x.has_value());
    Elem s = r.zero();
    for (int i = 0; i < 3; ++i) s = r.add(s, r.mul((*x)[i], row[i]));
    CHECK(r.is_one(s));
    auto c = r.reduce_row(row[0], {row[1], row[2]});
    Elem t = r.add(row[0], r.add(r.mul(c[0], row[1]), r.mul(c[1], row[2])));
    CHECK(r.is_unit(t));
    CHECK_FALSE(r.bezout({r.from_int(2), r.from_int(4)}).has_value());
}

TEST_CASE("element JSON round trip") {
    Ring q = Ring::rationals();
    Elem a = q.mul(q.from_int(3), q.inv(q.from_int(-6)));
    CHECK(q.str(a) == "-1/2");
    CHECK(q.elem_from_json(q.elem_to_json(a)) == a);
    Ring z = Ring::zmod(9);
    CHECK(z.elem_from_json(-1) == z.from_int(8));
}
