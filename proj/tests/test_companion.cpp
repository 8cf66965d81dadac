#include <doctest.h>

#include <random>

#include "chev/companion.hpp"

using namespace chev;

namespace {

Elem rnd(const Ring& r, std::mt19937_64& g) { return r.element(static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(r.size()))); }

GenWord random_word(const RootSystem& rs, const Ring& r, std::mt19937_64& g, int len, bool positive) {
    GenWord w;
    for (int i = 0; i < len; ++i) {
        int a = static_cast<int>(g() % rs.num_positive());
        w *= GenWord::x(positive ? a : rs.neg(a), rnd(r, g));
    }
    return w;
}

RepKind exact_rep(const RootSystem& rs) {
    if (rs.type() == 'E' && rs.rank() < 8) return RepKind::Minuscule;
    return Rep::default_kind(rs);
}

bool holds(const RootSystem& rs, const ConjugationCertificate& c, const Ring& r) {
    const Rep& rep = Rep::get(rs, exact_rep(rs));
    GenWord lhs = c.conjugator * c.input * inverse(c.conjugator, r);
    GenWord rhs = c.output.word(rs, r);
    if (rhs.center == -1) {
        rhs.center = 1;
        return rep.eval(lhs, r) == rep.eval(rhs, r).scaled(r.from_int(-1));
    }
    return rep.eval(lhs, r) == rep.eval(rhs, r);
}

bool supported_on_sigma(const RootSystem& rs, const CompanionForm& f) {
    const RootSet s = rs.companion_sigma();
    return std::vector<int>(s.begin(), s.end()) == f.u.roots;
}

}  // namespace

TEST_CASE("to_companion") {
    std::mt19937_64 g(23);
    const char* labels[] = {"A2", "A3", "A5", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"};
    const Ring rings[] = {Ring::prime_field(5), Ring::zmod(9), Ring::zmod(6), Ring::boolean(2)};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        for (const Ring& r : rings) {
            const int trials = rs.rank() >= 7 ? 1 : 3;
            for (int t = 0; t < trials; ++t) {
                GenWord u = random_word(rs, r, g, 6, true);
                ConjugationCertificate c = to_companion(rs, u, r);
                INFO(std::string(lab) << " " << r.name());
                CHECK(holds(rs, c, r));
                CHECK(supported_on_sigma(rs, c.output));
                CHECK_FALSE(c.output.minus);
                for (const Token& tok : c.conjugator.tokens) CHECK(rs.positive(tok.root));
            }
        }
    }
    // already companion: empty conjugator
    const auto& a2 = RootSystem::parse("A2");
    Ring f5 = Ring::prime_field(5);
    const int top = a2.highest();
    ConjugationCertificate c = to_companion(a2, GenWord::x(top, f5.one()) * GenWord::x(a2.simple(2), f5.from_int(3)), f5);
    CHECK(c.conjugator.empty());
    // A2: x_{alpha1}(1) is peeled
    ConjugationCertificate d = to_companion(a2, GenWord::x(a2.simple(1), f5.one()), f5);
    CHECK_FALSE(d.conjugator.empty());
    CHECK(holds(a2, d, f5));
    ConjugationCertificate bad = d;
    bad.output.u.coeffs[0] = f5.add(bad.output.u.coeffs[0], f5.one());
    CHECK_FALSE(holds(a2, bad, f5));
    bad = d;
    bad.output.minus = true;
    CHECK_FALSE(holds(a2, bad, f5));
    CHECK_THROWS_AS(to_companion(a2, GenWord::x(a2.neg(0), f5.one()), f5), InvalidInput);
}

TEST_CASE("inverse_companion and the minus side") {
    std::mt19937_64 g(29);
    const char* labels[] = {"A2", "A3", "A4", "A5", "A6", "B3", "B4", "C2", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"};
    const Ring rings[] = {Ring::prime_field(7), Ring::zmod(9), Ring::zmod(6), Ring::boolean(2)};
    for (const char* lab : labels) {
        const auto& rs = RootSystem::parse(lab);
        for (const Ring& r : rings) {
            const int trials = rs.rank() >= 7 ? 1 : 2;
            for (int t = 0; t < trials; ++t) {
                INFO(std::string(lab) << " " << r.name());
                GenWord v = random_word(rs, r, g, 6, false);
                ConjugationCertificate m = minus_side_to_companion(rs, v, r);
                CHECK(holds(rs, m, r));
                CHECK(supported_on_sigma(rs, m.output));
                if (rs.type() == 'A' || (rs.type() == 'E' && rs.rank() == 6)) {
                    ConjugationCertificate c = to_companion(rs, random_word(rs, r, g, 5, true), r);
                    ConjugationCertificate i = inverse_companion(rs, c.output, r);
                    CHECK(holds(rs, i, r));
                    CHECK(supported_on_sigma(rs, i.output));
                    const bool a4k1 = rs.type() == 'A' && (rs.rank() + 1) % 4 == 2;
                    if (r.kind() != RingKind::Boolean) CHECK(i.output.minus == a4k1);
                }
            }
        }
    }
    const auto& b3 = RootSystem::parse("B3");
    CHECK_THROWS_AS(inverse_companion(b3, CompanionForm{}, Ring::prime_field(5)), InvalidInput);
}
