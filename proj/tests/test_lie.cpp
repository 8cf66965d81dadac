#include <doctest.h>

#include <cstdlib>

#include "chev/lie.hpp"

using namespace chev;

TEST_CASE("structure constants satisfy the Jacobi identity") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                                          {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6},
                                                          {'E', 7}, {'F', 4}, {'G', 2}}) {
        const RootSystem& rs = RootSystem::get(t, l);
        const auto& sc = StructureConstants::get(rs);
        CHECK_MESSAGE(sc.jacobi_failures() == 0, rs.label());
    }
}

TEST_CASE("|N(a,b)| = r + 1 and antisymmetry") {
    for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2},
                                                          {'E', 8}}) {
        const RootSystem& rs = RootSystem::get(t, l);
        const auto& sc = StructureConstants::get(rs);
        for (int a = 0; a < rs.num_roots(); ++a)
            for (int b = 0; b < rs.num_roots(); ++b) {
                if (rs.sum(a, b) < 0) {
                    CHECK(sc.N(a, b) == 0);
                    continue;
                }
                CHECK(std::abs(sc.N(a, b)) == rs.string(b, a).first + 1);
                CHECK(sc.N(a, b) == -sc.N(b, a));
                CHECK(sc.N(rs.neg(a), rs.neg(b)) == -sc.N(a, b));
            }
    }
    const RootSystem& a2 = RootSystem::get('A', 2);
    CHECK(std::abs(StructureConstants::get(a2).N(a2.simple(1), a2.simple(2))) == 1);
    const RootSystem& g2 = RootSystem::get('G', 2);
    int n = std::abs(StructureConstants::get(g2).N(g2.simple(1), g2.simple(2)));
    CHECK((n >= 1 && n <= 3));
}
