#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chev/sl_factorize.hpp"

namespace chev {

// Seeded generators shared by the self-test and the CLI.
Elem random_elem(const Ring& r, std::mt19937_64& g);
Elem random_unit(const Ring& r, std::mt19937_64& g);
// Random word of x-tokens over the positive (or negative) roots, each root kept with probability 2/3, shuffled.
GenWord random_unipotent(const RootSystem& rs, const Ring& r, std::mt19937_64& g, bool positive);
Quadruple random_quadruple(const RootSystem& rs, const Ring& r, std::mt19937_64& g);
// Random element of SL_n(R) as a product of elementary matrices and a diagonal correction.
Matrix random_sl(const Ring& r, int n, std::mt19937_64& g);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

enum class SelftestScope { Quick, Full, E7Nice };
SelftestScope parse_scope(const std::string& s);  // throws InvalidInput
std::vector<int> scope_criteria(SelftestScope s);

// Criteria 1..9 of the acceptance list. Deterministic for a given seed.
CriterionResult run_criterion(int id, std::uint64_t seed = 2024);
std::string format_result(const CriterionResult& c);

}  // namespace chev
