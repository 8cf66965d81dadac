#include "chev/companion.hpp"

#include <algorithm>

namespace chev {

namespace {

std::vector<int> sigma_order(const RootSystem& rs) {
    const RootSet s = rs.companion_sigma();
    return std::vector<int>(s.begin(), s.end());
}

void require_x(const RootSystem& rs, const GenWord& w, bool positive, const char* what) {
    if (w.center != 1) throw InvalidInput(std::string(what) + " must not carry a central sign");
    for (const Token& t : w.tokens)
        if (t.kind != Tok::X || rs.positive(t.root) != positive)
            throw InvalidInput(std::string(what) + " must consist of x-tokens on " + (positive ? "positive" : "negative") + " roots");
}

// Central torus bits -> sign; only type A may produce a nontrivial one (-1 in SL_n, n even).
int central_sign(const RootSystem& rs, const std::vector<int>& t) {
    if (std::all_of(t.begin(), t.end(), [](int v) { return v == 0; })) return 1;
    if (rs.type() != 'A') throw std::logic_error("unexpected central residual in " + rs.label());
    return -1;
}

GenWord mono_word(const Monomial& m, const Ring& r) { return m.word(r); }

// conjugator and u' with conj * (u pi) * conj^-1 = u' pi, u' over `target`
struct Peeled {
    GenWord conj;
    GenWord u;
};

// Peel roots of `layer` off u (value in U(support)), pushing them through pi.
Peeled peel(const RootSystem& rs, const GenWord& u, const RootSet& layer, const RootSet& support, const Monomial& pi,
            const Ring& r) {
    std::vector<int> order(layer.begin(), layer.end());
    for (int a : support)
        if (!std::binary_search(layer.begin(), layer.end(), a)) order.push_back(a);
    UnipotentVector v = collect_value(rs, u, order, r);
    UnipotentVector theta, rest;
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto& dst = k < layer.size() ? theta : rest;
        dst.roots.push_back(order[k]);
        dst.coeffs.push_back(v.coeffs[k]);
    }
    GenWord tw = theta.word(r);
    // theta^-1 (u pi) theta = rest * (pi theta pi^-1) * pi
    return {inverse(tw, r), rest.word(r) * pi.conj(tw, r)};
}

}  // namespace

GenWord CompanionForm::word(const RootSystem& rs, const Ring& r) const {
    GenWord w = u.word(r) * pi_lift(rs, r);
    if (minus) w.center = -1;
    return w;
}

nlohmann::json CompanionForm::to_json(const RootSystem& rs, const Ring& r) const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t k = 0; k < u.roots.size(); ++k) coeffs[rs.root_str(u.roots[k])] = r.elem_to_json(u.coeffs[k]);
    return {{"sigma_coeffs", coeffs}, {"minus", minus}};
}

ConjugationCertificate to_companion(const RootSystem& rs, const GenWord& u, const Ring& r) {
    require_x(rs, u, true, "to_companion input");
    const Monomial pi = pi_monomial(rs);
    const auto part = rs.omega_theta(rs.pi_word());
    ConjugationCertificate cert;
    cert.input = u * pi_lift(rs, r);
    RootSet support = rs.positive_roots();
    GenWord cur = u;
    for (int k = static_cast<int>(part.omega.size()) - 1; k >= 1; --k) {
        const RootSet& layer = part.omega[k];
        if (layer.empty()) continue;
        Peeled p = peel(rs, cur, layer, support, pi, r);
        cert.conjugator = p.conj * cert.conjugator;
        cur = p.u;
        RootSet next;
        std::set_difference(support.begin(), support.end(), layer.begin(), layer.end(), std::back_inserter(next));
        support = next;
    }
    const RootSet sigma = rs.companion_sigma();
    if (support != sigma) {
        // E6: the leftover is alpha_2
        RootSet extra;
        std::set_difference(support.begin(), support.end(), sigma.begin(), sigma.end(), std::back_inserter(extra));
        for (int a : extra)
            if (!std::binary_search(sigma.begin(), sigma.end(), pi.perm()[a]))
                throw std::logic_error("pi does not move the leftover root into Sigma");
        Peeled p = peel(rs, cur, extra, support, pi, r);
        cert.conjugator = p.conj * cert.conjugator;
        cur = p.u;
    }
    cert.output.u = collect_value(rs, cur, sigma_order(rs), r);
    return cert;
}

namespace {

// conj * (z * w * pi) * conj^-1 with w having arbitrary-sign x-tokens: rotate until w is positive, then peel.
ConjugationCertificate finish_rotated(const RootSystem& rs, GenWord w, GenWord conj, int sign, const Ring& r) {
    const Monomial pi = pi_monomial(rs);
    const Monomial pinv = pi.inverse();
    auto positive = [&](const GenWord& g) {
        return std::all_of(g.tokens.begin(), g.tokens.end(), [&](const Token& t) { return rs.positive(t.root); });
    };
    for (int guard = 0; !positive(w); ++guard) {
        if (guard > rs.num_roots()) throw std::logic_error("rotation by pi never reaches U+");
        // pi^-1 (w pi) pi = (pi^-1 w pi) pi
        w = pinv.conj(w, r);
        conj = pinv.word(r) * conj;
    }
    ConjugationCertificate c = to_companion(rs, w, r);
    ConjugationCertificate out;
    out.conjugator = c.conjugator * conj;
    out.output = c.output;
    out.output.minus = sign == -1;
    return out;
}

}  // namespace

ConjugationCertificate inverse_companion(const RootSystem& rs, const CompanionForm& c, const Ring& r) {
    if (rs.type() != 'A' && !(rs.type() == 'E' && rs.rank() == 6))
        throw InvalidInput("inverse_companion is available for types A and E6 only");
    const GenWord x = c.word(rs, r);
    const Monomial pi = pi_monomial(rs);
    const Monomial w0 = rs.type() == 'A' ? w0_lift(rs) : obvious_lift(rs, rs.longest_word({1, 3, 4, 5, 6}));
    const Monomial rho = w0 * pi.inverse() * w0.inverse();
    const TorusNormalizer n = normalize_to_pi(rs, rho);
    Monomial h(rs);
    for (int j = 0; j < rs.rank(); ++j)
        if (n.t[j]) h.mul_h(rs.simple(j + 1));
    const Monomial m = h * w0;
    // m x^-1 m^-1 = m pi^-1 m^-1 * m u^-1 m^-1 = z pi u1; conjugating by u1 gives z u1 pi
    GenWord u1 = m.conj(inverse(c.u.word(r), r), r);
    int sign = central_sign(rs, n.central) * (c.minus ? -1 : 1);
    ConjugationCertificate out = finish_rotated(rs, u1, u1 * m.word(r), sign, r);
    out.input = inverse(x, r);
    return out;
}

ConjugationCertificate minus_side_to_companion(const RootSystem& rs, const GenWord& v, const Ring& r) {
    require_x(rs, v, false, "minus-side input");
    const Monomial pi = pi_monomial(rs);
    const GenWord input = v * pi_lift(rs, r);
    const Monomial w0 = w0_lift(rs);
    const bool inverse_route = rs.type() == 'A' || (rs.type() == 'E' && rs.rank() == 6);
    if (!inverse_route) {
        const TorusNormalizer n = normalize_to_pi(rs, w0 * pi * w0.inverse());
        Monomial h(rs);
        for (int j = 0; j < rs.rank(); ++j)
            if (n.t[j]) h.mul_h(rs.simple(j + 1));
        const Monomial m = h * w0;
        ConjugationCertificate out = finish_rotated(rs, m.conj(v, r), m.word(r), central_sign(rs, n.central), r);
        out.input = input;
        return out;
    }
    // w0 lifts pi to a lift of pi^-1: invert, normalize, then invert back through inverse_companion
    const Monomial rho_inv = (w0 * pi * w0.inverse()).inverse();
    const TorusNormalizer n = normalize_to_pi(rs, rho_inv);
    Monomial h(rs);
    for (int j = 0; j < rs.rank(); ++j)
        if (n.t[j]) h.mul_h(rs.simple(j + 1));
    const Monomial m = h * w0;
    // m (v pi)^-1 m^-1 = z pi u2, u2 = m v^-1 m^-1; conjugate by u2 to reach z u2 pi
    GenWord u2 = m.conj(inverse(v, r), r);
    ConjugationCertificate first = finish_rotated(rs, u2, u2 * m.word(r), central_sign(rs, n.central), r);
    // first.conjugator * (v pi)^-1 * first.conjugator^-1 = first.output, so (v pi) maps to first.output^-1
    ConjugationCertificate second = inverse_companion(rs, first.output, r);
    ConjugationCertificate out;
    out.conjugator = second.conjugator * first.conjugator;
    out.output = second.output;
    out.input = input;
    return out;
}

}  // namespace chev
