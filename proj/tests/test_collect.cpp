#include <doctest.h>

#include <algorithm>
#include <random>

#include "chev/collect.hpp"

using namespace chev;

namespace {

Elem rnd(const Ring& r, std::mt19937_64& g) { return r.element(static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(r.size()))); }

GenWord random_positive_word(const RootSystem& rs, const Ring& r, std::mt19937_64& g, int len) {
    GenWord w;
    for (int i = 0; i < len; ++i) w *= GenWord::x(static_cast<int>(g() % rs.num_positive()), rnd(r, g));
    return w;
}

bool same_in(const Rep& rep, const GenWord& a, const GenWord& b, const Ring& r) { return rep.eval(a, r) == rep.eval(b, r); }

}  // namespace

TEST_CASE("collection examples") {
    const auto& a2 = RootSystem::parse("A2");
    Ring z = Ring::integers();
    const int a1 = a2.simple(1), b1 = a2.simple(2), s = a2.sum(a1, b1);
    GenWord w = GenWord::x(a1, z.one()) * GenWord::x(b1, z.one());
    UnipotentVector v = collect_unipotent(a2, w, {b1, s, a1}, z);
    CHECK(v.coeff(a1, z) == z.one());
    CHECK(v.coeff(b1, z) == z.one());
    CHECK((v.coeff(s, z) == z.one() || v.coeff(s, z) == z.from_int(-1)));
    CHECK(same_in(Rep::get(a2, RepKind::NaturalA), v.word(z), w, z));
    // single token
    UnipotentVector one = collect_unipotent(a2, GenWord::x(s, z.from_int(5)), {a1, b1, s}, z);
    CHECK(one.coeff(s, z) == z.from_int(5));
    CHECK(one.coeff(a1, z) == z.zero());
    CHECK_THROWS_AS(collect_unipotent(a2, GenWord::x(a2.neg(a1), z.one()), {a1, b1, s}, z), InvalidInput);
    CHECK_THROWS_AS(collect_unipotent(a2, GenWord{}, {a1, a2.neg(a1)}, z), InvalidInput);
    // commuting roots keep their coefficients under reordering
    const auto& a3 = RootSystem::parse("A3");
    GenWord c = GenWord::x(a3.simple(1), z.from_int(2)) * GenWord::x(a3.simple(3), z.from_int(3));
    UnipotentVector cv = collect_unipotent(a3, c, {a3.simple(3), a3.simple(1)}, z);
    CHECK(cv.coeffs == std::vector<Elem>{z.from_int(3), z.from_int(2)});
}

TEST_CASE("collection round trips in arbitrary orders") {
    std::mt19937_64 g(3);
    const char* labels[] = {"A3", "B3", "C3", "D4", "G2", "F4", "E6"};
    const Ring rings[] = {Ring::zmod(9), Ring::prime_field(5), Ring::integers()};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        const Rep& rep = Rep::get(rs, Rep::default_kind(rs));
        for (const Ring& r : rings) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> order;
                for (int a = 0; a < rs.num_positive(); ++a) order.push_back(a);
                std::shuffle(order.begin(), order.end(), g);
                Ring rr = r.kind() == RingKind::Integers ? Ring::zmod(1000003) : r;  // keep integer entries small
                GenWord w = random_positive_word(rs, rr, g, 6);
                UnipotentVector v = collect_unipotent(rs, w, order, rr);
                INFO(std::string(lab) << " " << rr.name());
                CHECK(same_in(rep, v.word(rr), w, rr));
            }
        }
        // a negative unipotent set, with tokens given through w/h conjugation
        Ring r = Ring::zmod(25);
        std::vector<int> neg;
        for (int a = 0; a < rs.num_positive(); ++a) neg.push_back(rs.neg(a));
        GenWord u = random_positive_word(rs, r, g, 5);
        GenWord w0;
        for (int i : rs.longest_word()) w0 *= GenWord::w(rs.simple(i), r.one());
        GenWord conj = conjugate(w0, u, r);
        UnipotentVector v = collect_value(rs, conj, neg, r);
        CHECK(same_in(rep, v.word(r), conj, r));
    }
}

TEST_CASE("Chevalley commutator formula") {
    std::mt19937_64 g(5);
    const char* labels[] = {"A2", "B2", "C2", "G2", "B3", "F4"};
    Ring r = Ring::zmod(49);
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        const Rep& rep = Rep::get(rs, Rep::default_kind(rs));
        for (int a = 0; a < rs.num_roots(); ++a)
            for (int b = 0; b < rs.num_roots(); ++b) {
                if (a == rs.neg(b)) continue;
                Elem t = rnd(r, g), u = rnd(r, g);
                GenWord lhs = commutator(GenWord::x(a, t), GenWord::x(b, u), r);
                GenWord rhs = chevalley_commutator(rs, a, b, t, u, r);
                if (!same_in(rep, lhs, rhs, r)) {
                    FAIL(lab << " " << rs.root_str(a) << " " << rs.root_str(b));
                }
                if (rs.sum(a, b) < 0) CHECK(commutator_terms(rs, a, b).empty());
            }
    }
    const auto& c2 = RootSystem::parse("C2");
    // short alpha1, long alpha2: two factors
    CHECK(commutator_terms(c2, c2.simple(1), c2.simple(2)).size() == 2);
    const auto& a2 = RootSystem::parse("A2");
    const auto& t = commutator_terms(a2, a2.simple(1), a2.simple(2));
    REQUIRE(t.size() == 1);
    CHECK((t[0].c == 1 || t[0].c == -1));
    CHECK_THROWS_AS(commutator_terms(a2, 0, a2.neg(0)), InvalidInput);
}

TEST_CASE("adjoint triviality detects the centre only") {
    const auto& a3 = RootSystem::parse("A3");
    Ring f5 = Ring::prime_field(5);
    GenWord minus_one;  // h_1(-1) h_3(-1) = -I in SL4
    minus_one *= GenWord::h(a3.simple(1), f5.from_int(-1));
    minus_one *= GenWord::h(a3.simple(3), f5.from_int(-1));
    CHECK(acts_trivially_adjoint(a3, minus_one, f5));
    CHECK(Rep::get(a3, RepKind::NaturalA).eval(minus_one, f5).is_scalar_sign(-1));
    CHECK_FALSE(acts_trivially_adjoint(a3, GenWord::h(a3.simple(1), f5.from_int(-1)), f5));
}
