#include "chev/comm_decomp.hpp"

namespace chev {

namespace {

void require_sr1(const Ring& r) {
    if (r.kind() == RingKind::Integers) throw NotStableRank1("the integers do not have stable rank 1");
}

void require_sign(const RootSystem& rs, const GenWord& w, bool positive, const char* what) {
    for (const Token& t : w.tokens)
        if (t.kind != Tok::X || rs.positive(t.root) != positive)
            throw InvalidInput(std::string(what) + " must consist of " + (positive ? "positive" : "negative") + " root elements");
    if (w.center != 1) throw InvalidInput(std::string(what) + " carries a central sign");
}

bool trivial_unipotent(const RootSystem& rs, const GenWord& w, bool positive, const Ring& r) {
    if (w.tokens.empty()) return true;
    RootSet s = rs.positive_roots();
    if (!positive)
        for (int& a : s) a = rs.neg(a);
    return collect_value(rs, w, s, r).is_zero(r);
}

CommPair conj_pair(const GenWord& c, const CommPair& p, const Ring& r) {
    return {conjugate(c, p.a, r), conjugate(c, p.b, r)};
}

// u v = [X, psi^-1] * (mu psi)^-1 zeta (mu psi), psi = pi^-1 v; the pairs are returned conjugated by mu psi
// so the whole thing reads conj * prod * conj^-1 with conj = (mu psi)^-1.
struct Core {
    int sign = 1;
    GenWord mu_psi;
    CommPair middle;
    std::vector<CommPair> sigma_pairs;
};

Core core(const RootSystem& rs, const GenWord& u, const GenWord& v, const Ring& r) {
    const GenWord pi = pi_lift(rs, r);
    const GenWord psi = inverse(pi, r) * v;
    const GenWord psi_inv = inverse(psi, r);
    const ConjugationCertificate first = to_companion(rs, u, r);
    const ConjugationCertificate second = minus_side_to_companion(rs, inverse(v, r), r);
    Core c;
    c.sign = (first.output.minus ? -1 : 1) * (second.output.minus ? -1 : 1);
    // zeta = z1 z2^-1, collected on sigma
    const RootSet sigma = rs.companion_sigma();
    const GenWord zw = first.output.u.word(r) * inverse(second.output.u.word(r), r);
    const UnipotentVector zeta = collect_value(rs, zw, sigma, r);
    const GenWord& mu = first.conjugator;
    const GenWord& nu = second.conjugator;
    c.mu_psi = mu * psi;
    const GenWord x = inverse(mu, r) * zeta.word(r) * nu;
    c.middle = conj_pair(c.mu_psi, {x, psi_inv}, r);
    c.sigma_pairs = sigma_to_commutators(rs, zeta, r);
    return c;
}

}  // namespace

GenWord Quadruple::word() const {
    GenWord w = u1 * v1 * u2 * v2;
    w.center *= center;
    return w;
}

GenWord Decomposition::product(const Ring& r) const {
    GenWord w = conjugator;
    for (const CommPair& p : pairs) w *= commutator(p.a, p.b, r);
    w *= inverse(conjugator, r);
    w.center = center;
    return w;
}

nlohmann::json Decomposition::to_json(const RootSystem& rs, const Ring& r) const {
    nlohmann::json ps = nlohmann::json::array();
    for (const CommPair& p : pairs) ps.push_back({word_to_json(p.a, rs, r), word_to_json(p.b, rs, r)});
    return {{"center", center}, {"conjugator", word_to_json(conjugator, rs, r)}, {"pairs", ps}, {"count", pairs.size()}};
}

Decomposition Decomposition::from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r) {
    if (!j.is_object() || !j.contains("pairs")) throw InvalidInput("decomposition JSON needs \"pairs\"");
    Decomposition d;
    d.center = j.value("center", 1);
    if (d.center != 1 && d.center != -1) throw InvalidInput("center must be +1 or -1");
    if (j.contains("conjugator")) d.conjugator = word_from_json(j.at("conjugator"), rs, r);
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("each pair must be a two-element array");
        d.pairs.push_back({word_from_json(p[0], rs, r), word_from_json(p[1], rs, r)});
    }
    if (j.contains("count") && j.at("count").get<std::size_t>() != d.pairs.size())
        throw InvalidInput("count does not match the number of pairs");
    return d;
}

namespace {

// Exact local simplification: x(0), h(1) vanish; neighbours on one root merge; w(u) w(-u) cancels.
GenWord tidy(const GenWord& w, const Ring& r) {
    GenWord out;
    out.center = w.center;
    for (const Token& t : w.tokens) {
        if ((t.kind == Tok::X && r.is_zero(t.t)) || (t.kind == Tok::H && r.is_one(t.t))) continue;
        if (!out.tokens.empty() && out.tokens.back().root == t.root && out.tokens.back().kind == t.kind) {
            Token& top = out.tokens.back();
            if (t.kind == Tok::X) {
                top.t = r.add(top.t, t.t);
                if (r.is_zero(top.t)) out.tokens.pop_back();
                continue;
            }
            if (t.kind == Tok::H) {
                top.t = r.mul(top.t, t.t);
                if (r.is_one(top.t)) out.tokens.pop_back();
                continue;
            }
            if (top.t == r.neg(t.t)) {
                out.tokens.pop_back();
                continue;
            }
        }
        out.tokens.push_back(t);
    }
    return out;
}

Decomposition tidy(Decomposition d, const Ring& r) {
    d.conjugator = tidy(d.conjugator, r);
    std::vector<CommPair> kept;
    for (const CommPair& p : d.pairs) {
        CommPair q{tidy(p.a, r), tidy(p.b, r)};
        if (q.a.empty() || q.b.empty()) continue;  // [1, b] = [a, 1] = 1
        kept.push_back(std::move(q));
    }
    d.pairs = std::move(kept);
    if (d.pairs.empty()) d.conjugator = GenWord{};
    return d;
}

}  // namespace

Decomposition decompose_short(const RootSystem& rs, const GenWord& u, const GenWord& v, const Ring& r) {
    require_sr1(r);
    require_sign(rs, u, true, "u");
    require_sign(rs, v, false, "v");
    Decomposition d;
    if (trivial_unipotent(rs, u, true, r) && trivial_unipotent(rs, v, false, r)) return d;
    Core c = core(rs, u, v, r);
    d.center = c.sign;
    d.conjugator = inverse(c.mu_psi, r);
    d.pairs.push_back(std::move(c.middle));
    for (auto& p : c.sigma_pairs) d.pairs.push_back(std::move(p));
    return tidy(std::move(d), r);
}

Decomposition decompose(const RootSystem& rs, const Quadruple& q, const Ring& r) {
    require_sr1(r);
    require_sign(rs, q.u1, true, "u1");
    require_sign(rs, q.u2, true, "u2");
    require_sign(rs, q.v1, false, "v1");
    require_sign(rs, q.v2, false, "v2");
    if (q.center != 1 && q.center != -1) throw InvalidInput("center must be +1 or -1");
    // u1 v1 u2 v2 = c2 u3 v3 with u3 = u1 u2, v3 = v1 v2, c2 = u3 [u2^-1, v1] u3^-1
    const GenWord u3 = q.u1 * q.u2;
    const GenWord v3 = q.v1 * q.v2;
    const bool c2_trivial = trivial_unipotent(rs, q.u2, true, r) || trivial_unipotent(rs, q.v1, false, r);
    Decomposition d;
    if (trivial_unipotent(rs, u3, true, r) && trivial_unipotent(rs, v3, false, r)) {
        if (c2_trivial) {
            d.center = q.center;
            return d;
        }
        d.center = q.center;
        d.pairs.push_back({conjugate(u3, inverse(q.u2, r), r), conjugate(u3, q.v1, r)});
        return tidy(std::move(d), r);
    }
    Core c = core(rs, u3, v3, r);
    d.center = q.center * c.sign;
    d.conjugator = inverse(c.mu_psi, r);
    if (!c2_trivial) {
        const CommPair c2{conjugate(u3, inverse(q.u2, r), r), conjugate(u3, q.v1, r)};
        d.pairs.push_back(conj_pair(c.mu_psi, c2, r));
    }
    d.pairs.push_back(std::move(c.middle));
    for (auto& p : c.sigma_pairs) d.pairs.push_back(std::move(p));
    return tidy(std::move(d), r);
}

std::string verify_result_name(VerifyResult v) {
    switch (v) {
        case VerifyResult::Exact:
            return "exact";
        case VerifyResult::EqualModCenter:
            return "equal-mod-center";
        default:
            return "mismatch";
    }
}

VerifyResult verify(const RootSystem& rs, const Ring& r, RepKind kind, const GenWord& original, const Decomposition& d) {
    const Rep& rep = Rep::get(rs, kind);
    GenWord a = original, b = d.product(r);
    bool dropped = false;
    if (!rep.supports_center_sign()) {
        dropped = a.center != b.center;
        a.center = b.center = 1;
    }
    const Matrix ma = rep.eval(a, r);
    const Matrix mb = rep.eval(b, r);
    if (ma == mb) return rep.center_faithful() && !dropped ? VerifyResult::Exact : VerifyResult::EqualModCenter;
    // central elements act by scalars on these modules
    const Matrix q = ma * rep.eval(inverse(b, r), r);
    const Elem s = q.at(0, 0);
    if (r.is_unit(s) && q == Matrix::identity(r, rep.dim()).scaled(s))
        return VerifyResult::EqualModCenter;
    return VerifyResult::Mismatch;
}

}  // namespace chev
