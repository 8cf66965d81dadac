#include <doctest.h>

#include <regex>

#include "chev/report.hpp"
#include "chev/selftest.hpp"

using namespace chev;

namespace {

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("weight diagrams") {
    const auto& a3 = RootSystem::get('A', 3);
    const std::string dot = weight_diagram_dot(a3, RepKind::NaturalA);
    CHECK(count(dot, "[label=\"(") == 4);
    CHECK(count(dot, "->") == 3);
    for (const char* lab : {"[label=\"1\"", "[label=\"2\"", "[label=\"3\""}) CHECK(count(dot, lab) == 1);
    // the chain eps_1..eps_3 over the lowest weight
    CHECK(count(dot, "fillcolor=black") == 3);

    const auto& g2 = RootSystem::get('G', 2);
    const std::string ad = weight_diagram_dot(g2, RepKind::Adjoint);
    CHECK(count(ad, "[label=\"(") == 14);
    CHECK(count(ad, "fillcolor=black") == static_cast<int>(g2.companion_sigma().size()));
    CHECK(weight_diagram_dot(g2, RepKind::Adjoint) == ad);  // deterministic

    CHECK_THROWS_AS(weight_diagram_dot(a3, RepKind::NaturalC), UnsupportedRep);
    CHECK_THROWS_AS(Rep::parse_kind("bogus"), UnsupportedRep);
}

TEST_CASE("roots report") {
    const auto& a2 = RootSystem::get('A', 2);
    auto j = roots_report(a2, 0, false);
    CHECK(j.at("num_positive") == 3);
    CHECK(j.at("positive_roots").size() == 3);
    CHECK_FALSE(j.contains("theta"));

    const auto& e6 = RootSystem::get('E', 6);
    auto e = roots_report(e6, 2, true);
    CHECK(e.at("theta_equals") == "Sigma_2");
    CHECK(e.at("omega0_size") == 5);
    CHECK(e.at("sigma_k").at("roots").size() == e6.sigma_k(2).size());
    CHECK(roots_text(e6, 0, true).find("Theta = Sigma_2") != std::string::npos);

    auto b3 = roots_report(RootSystem::get('B', 3), 0, true);
    CHECK(b3.at("theta_equals") == "empty");
    CHECK(b3.at("omega0_size") == 3);

    CHECK_THROWS_AS(RootSystem::get('B', 1), InvalidInput);
    CHECK_THROWS_AS(roots_report(a2, 3, false), InvalidInput);
}

TEST_CASE("quadruple JSON and alternating split") {
    const auto& c3 = RootSystem::get('C', 3);
    const Ring r = Ring::zmod(9);
    std::mt19937_64 g(5);
    Quadruple q = random_quadruple(c3, r, g);
    q.center = -1;
    const auto j = quadruple_to_json(q, c3, r);
    const Quadruple back = quadruple_from_json(j, c3, r);
    CHECK(back.word() == q.word());
    CHECK(back.center == -1);
    auto bad = j;
    bad["center"] = 3;
    CHECK_THROWS_AS(quadruple_from_json(bad, c3, r), InvalidInput);
    bad = j;
    bad["u3"] = nlohmann::json::array();
    CHECK_THROWS_AS(quadruple_from_json(bad, c3, r), InvalidInput);

    // the blocks come back as they were (each block non-empty)
    Quadruple q2 = q;
    q2.center = 1;
    if (!q2.u1.empty() && !q2.v1.empty() && !q2.u2.empty() && !q2.v2.empty()) {
        const Quadruple s = split_alternating(c3, q2.word());
        CHECK(s.u1 == q2.u1);
        CHECK(s.v1 == q2.v1);
        CHECK(s.u2 == q2.u2);
        CHECK(s.v2 == q2.v2);
    }
    // starts with U-: u1 is empty
    const Quadruple t = split_alternating(c3, GenWord::x(c3.neg(0), r.one()) * GenWord::x(0, r.one()));
    CHECK(t.u1.empty());
    CHECK(t.v1.size() == 1);
    CHECK(t.u2.size() == 1);
    GenWord five;
    for (int k = 0; k < 5; ++k) five *= GenWord::x(k % 2 ? c3.neg(0) : 0, r.one());
    CHECK_THROWS_AS(split_alternating(c3, five), InvalidInput);
    CHECK_THROWS_AS(split_alternating(c3, GenWord::w(0, r.one())), InvalidInput);
}

TEST_CASE("decompositions come out tidy") {
    const auto& a3 = RootSystem::get('A', 3);
    const Ring r = Ring::prime_field(5);
    std::mt19937_64 g(9);
    for (int t = 0; t < 10; ++t) {
        const Quadruple q = random_quadruple(a3, r, g);
        const Decomposition d = decompose(a3, q, r);
        CHECK(verify(a3, r, RepKind::NaturalA, q.word(), d) == VerifyResult::Exact);
        for (const auto& p : d.pairs) {
            CHECK_FALSE(p.a.empty());
            CHECK_FALSE(p.b.empty());
            for (const GenWord* w : {&p.a, &p.b})
                for (const Token& tok : w->tokens) {
                    if (tok.kind == Tok::X) CHECK_FALSE(r.is_zero(tok.t));
                    if (tok.kind == Tok::H) CHECK_FALSE(r.is_one(tok.t));
                }
        }
    }
}

TEST_CASE("selftest plumbing") {
    CHECK(parse_scope("quick") == SelftestScope::Quick);
    CHECK_THROWS_AS(parse_scope("slow"), InvalidInput);
    CHECK(scope_criteria(SelftestScope::E7Nice) == std::vector<int>{3});
    CHECK(scope_criteria(SelftestScope::Full).size() == 9);
    CHECK_THROWS_AS(run_criterion(10), InvalidInput);
    const CriterionResult c = run_criterion(8);
    CHECK(c.pass);
    CHECK(format_result(c).rfind("PASS criterion 8", 0) == 0);

    std::mt19937_64 g(1);
    for (const Ring& r : {Ring::zmod(6), Ring::zmod(25), Ring::boolean(2)})
        for (int n = 2; n <= 5; ++n) CHECK(r.is_one(random_sl(r, n, g).det()));
    // integers: small entries, never throws
    const Ring z = Ring::integers();
    for (int k = 0; k < 20; ++k) CHECK_NOTHROW(random_elem(z, g));
}
