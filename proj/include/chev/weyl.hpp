#pragma once

#include <vector>

#include "chev/rep.hpp"

namespace chev {

struct ExcludedType : InvalidInput {
    using InvalidInput::InvalidInput;
};
// The lift is not conjugate to pi under H(Z), not even up to the centre.
struct LiftNotConjugate : InvalidInput {
    using InvalidInput::InvalidInput;
};

// eta with w_a(1) x_b(t) w_a(1)^-1 = x_{s_a b}(eta t)
int weyl_sign(const RootSystem& rs, int a, int b);

// h(t) * n_w in the extended Weyl group, h(t) = prod_i h_{alpha_i}((-1)^{t_i}),
// n_w = product of w_i(1) along any reduced word of w.
class Monomial {
public:
    explicit Monomial(const RootSystem& rs);
    // Tokens must be w/h with parameter +-1; w only on simple roots or their negatives.
    static Monomial from_word(const RootSystem& rs, const GenWord& w, const Ring& r);

    const RootSystem& roots() const { return *rs_; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& torus() const { return t_; }

    void mul_w(int k, int sign);  // right multiply by w_{alpha_k}(sign), k 1-based
    void mul_h(int root);         // right multiply by h_root(-1)
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    bool operator==(const Monomial& o) const { return perm_ == o.perm_ && t_ == o.t_; }

    WeylWord reduced() const;
    GenWord word(const Ring& r) const;
    // this * x_b(c) * this^-1 = x_{w b}(conj_sign(b) * c)
    int conj_sign(int b) const;
    GenWord conj(const GenWord& xword, const Ring& r) const;

private:
    const RootSystem* rs_;
    std::vector<int> perm_;
    std::vector<int> t_;
};

bool torus_is_central(const RootSystem& rs, const std::vector<int>& t);

// A lift of the pi_word element with a sign on each letter: prod_k w_{word[k]}(signs[k]).
struct SignedLift {
    WeylWord word;
    std::vector<int> signs;
    GenWord gen_word(const RootSystem& rs, const Ring& r) const;
    nlohmann::json to_json() const;
    static SignedLift from_json(const nlohmann::json& j);
};

GenWord pi_lift(const RootSystem& rs, const Ring& r);
Monomial pi_monomial(const RootSystem& rs);
// The lift of w0 used by the companion algorithms: the obvious one, except in type A where
// it is +-(antidiagonal identity) of determinant 1, or the alternating antidiagonal when n = 2 mod 4.
Monomial w0_lift(const RootSystem& rs);
Monomial obvious_lift(const RootSystem& rs, const WeylWord& w);

SignedLift sign_form(const RootSystem& rs, const Monomial& m);  // throws InvalidInput when impossible
Monomial to_monomial(const RootSystem& rs, const SignedLift& s);
SignedLift sign_flip(const RootSystem& rs, const SignedLift& s, int gamma);
// Roots gamma with (prod h_gamma(-1)) lift (prod h_gamma(-1))^-1 = pi_lift, up to a central torus element
// (exact whenever the per-type chain succeeds).
std::vector<int> normalize_lift(const RootSystem& rs, const SignedLift& s);

// h(t') with h(t') rho h(t')^-1 = h(central) pi. Prefers central = 0.
struct TorusNormalizer {
    std::vector<int> t;        // conjugating torus element, as bits
    std::vector<int> central;  // residual central torus bits
    GenWord word(const RootSystem& rs, const Ring& r) const;
};
TorusNormalizer normalize_to_pi(const RootSystem& rs, const Monomial& rho);

// w0_hat w_i(1) w0_hat^-1 == w_j(1), alpha_j = -w0(alpha_i), checked in matrices of rep (obvious lift of w0).
bool verify_nice(const RootSystem& rs, RepKind rep);

}  // namespace chev
