#pragma once

#include "chev/collect.hpp"
#include "chev/weyl.hpp"

namespace chev {

// u * pi with u in U(Sigma), Sigma = companion_sigma; minus = true means -u*pi (type A, n = 2 mod 4).
struct CompanionForm {
    UnipotentVector u;
    bool minus = false;

    GenWord word(const RootSystem& rs, const Ring& r) const;
    nlohmann::json to_json(const RootSystem& rs, const Ring& r) const;
};

// conjugator * input * conjugator^-1 = output
struct ConjugationCertificate {
    GenWord conjugator;
    GenWord input;
    CompanionForm output;
};

// u: value in U+ (x-tokens over positive roots). Conjugator lies in U+.
ConjugationCertificate to_companion(const RootSystem& rs, const GenWord& u, const Ring& r);
// Input is the inverse of c. Types A and E6 only.
ConjugationCertificate inverse_companion(const RootSystem& rs, const CompanionForm& c, const Ring& r);
// v: value in U- (x-tokens over negative roots). Input is v * pi.
ConjugationCertificate minus_side_to_companion(const RootSystem& rs, const GenWord& v, const Ring& r);

}  // namespace chev
