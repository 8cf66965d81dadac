#include <chrono>
#include <cstdio>
#include <iostream>

#include "chev/selftest.hpp"

// One line per acceptance criterion; exit status 1 if any is red.
int main() {
    using namespace chev;
    int failed = 0;
    for (int id : scope_criteria(SelftestScope::Full)) {
        const CriterionResult c = run_criterion(id);
        std::cout << format_result(c) << std::endl;
        std::fprintf(stderr, "  criterion %d took %.1f s\n", id, c.seconds);
        if (!c.pass) ++failed;
    }
    std::cout << (failed ? "FAIL " : "PASS ") << (9 - failed) << "/9 criteria green" << std::endl;
    return failed ? 1 : 0;
}
