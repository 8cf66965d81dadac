#pragma once

#include <vector>

#include "chev/rep.hpp"

namespace chev {

// Ordered product of root elements: prod_k x_{roots[k]}(coeffs[k]).
struct UnipotentVector {
    std::vector<int> roots;
    std::vector<Elem> coeffs;

    GenWord word(const Ring& r) const;  // zero coefficients are dropped
    bool is_zero(const Ring& r) const;
    Elem coeff(int root, const Ring& r) const;
};

// A linear functional (over simple-root coordinates) that is positive on every root of s.
// Throws InvalidInput when s is not unipotent.
std::vector<int> positive_functional(const RootSystem& rs, const RootSet& s);

// Coefficients of w in the ordered product over `order`, assuming the value of w lies in U(S),
// S = set(order) closed and unipotent. Tokens of w may be arbitrary; only the value matters.
UnipotentVector collect_value(const RootSystem& rs, const GenWord& w, const std::vector<int>& order, const Ring& r);

// Checked version: every token must be an x-token with root in `order`, and the set must be closed and unipotent.
UnipotentVector collect_unipotent(const RootSystem& rs, const GenWord& w, const std::vector<int>& order, const Ring& r);

// True when the value of w acts trivially in the adjoint module (so w is central).
bool acts_trivially_adjoint(const RootSystem& rs, const GenWord& w, const Ring& r);

struct CommutatorTerm {
    int i, j;  // root = i a + j b
    int root;
    std::int64_t c;  // coefficient of t^i u^j
};
// [x_a(t), x_b(u)] = prod_{terms, in order} x_{ia+jb}(c t^i u^j)
const std::vector<CommutatorTerm>& commutator_terms(const RootSystem& rs, int a, int b);
GenWord chevalley_commutator(const RootSystem& rs, int a, int b, Elem t, Elem u, const Ring& r);

}  // namespace chev
