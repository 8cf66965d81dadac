#include "chev/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chev {

nlohmann::json quadruple_to_json(const Quadruple& q, const RootSystem& rs, const Ring& r) {
    return {{"u1", word_to_json(q.u1, rs, r)},
            {"v1", word_to_json(q.v1, rs, r)},
            {"u2", word_to_json(q.u2, rs, r)},
            {"v2", word_to_json(q.v2, rs, r)},
            {"center", q.center}};
}

Quadruple quadruple_from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r) {
    if (!j.is_object()) throw InvalidInput("quadruple must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "u1" && it.key() != "v1" && it.key() != "u2" && it.key() != "v2" && it.key() != "center")
            throw InvalidInput("unknown quadruple field '" + it.key() + "'");
    Quadruple q;
    auto block = [&](const char* key, GenWord& w) {
        if (!j.contains(key)) return;
        w = word_from_json(j.at(key), rs, r);
        if (w.center != 1) throw InvalidInput("central sign belongs in the quadruple's \"center\" field");
    };
    block("u1", q.u1);
    block("v1", q.v1);
    block("u2", q.u2);
    block("v2", q.v2);
    if (j.contains("center")) {
        if (!j.at("center").is_number_integer()) throw InvalidInput("center must be +1 or -1");
        q.center = j.at("center").get<int>();
        if (q.center != 1 && q.center != -1) throw InvalidInput("center must be +1 or -1");
    }
    return q;
}

Quadruple split_alternating(const RootSystem& rs, const GenWord& w) {
    Quadruple q;
    q.center = w.center;
    GenWord* blocks[] = {&q.u1, &q.v1, &q.u2, &q.v2};
    int cur = 0;
    for (const Token& t : w.tokens) {
        if (t.kind != Tok::X) throw InvalidInput("only x tokens can be split into unipotent blocks");
        if (rs.positive(t.root) != (cur % 2 == 0) && ++cur >= 4)
            throw InvalidInput("word needs more than four alternating unipotent blocks");
        blocks[cur]->tokens.push_back(t);
    }
    return q;
}

namespace {

nlohmann::json omega_json(const RootSystem& rs, const RootSystem::Partition& p) {
    nlohmann::json om = nlohmann::json::array();
    for (const auto& o : p.omega) om.push_back(rs.set_json(o));
    return om;
}

// Name of the Sigma_k equal to s, if any.
std::string sigma_name(const RootSystem& rs, const RootSet& s) {
    for (int k = 1; k <= rs.rank(); ++k)
        if (rs.sigma_k(k) == s) return "Sigma_" + std::to_string(k);
    return "";
}

std::string list(const RootSystem& rs, const RootSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << rs.root_str(s[i]);
    return os.str();
}

std::string word_text(const WeylWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << "s" << w[i];
    return os.str();
}

void check_level(const RootSystem& rs, int k) {
    if (k < 0 || k > rs.rank()) throw InvalidInput("level k must lie in 1.." + std::to_string(rs.rank()));
}

}  // namespace

nlohmann::json roots_report(const RootSystem& rs, int k, bool theta) {
    check_level(rs, k);
    const auto part = rs.omega_theta(rs.pi_word());
    nlohmann::json j{{"type", std::string(1, rs.type())},
                     {"rank", rs.rank()},
                     {"positive_roots", rs.set_json(rs.positive_roots())},
                     {"num_positive", rs.num_positive()},
                     {"companion_sigma", rs.set_json(rs.companion_sigma())},
                     {"pi_word", rs.pi_word()},
                     {"omega", omega_json(rs, part)},
                     {"omega0_size", part.omega.empty() ? 0 : part.omega[0].size()}};
    if (theta) {
        j["theta"] = rs.set_json(part.theta);
        const std::string name = part.theta.empty() ? "empty" : sigma_name(rs, part.theta);
        j["theta_equals"] = name.empty() ? nlohmann::json(nullptr) : nlohmann::json(name);
    }
    if (k > 0) {
        j["sigma_k"] = {{"k", k}, {"roots", rs.set_json(rs.sigma_k(k))}};
        j["delta_k"] = {{"k", k}, {"roots", rs.set_json(rs.delta_k(k))}};
    }
    return j;
}

std::string roots_text(const RootSystem& rs, int k, bool theta) {
    check_level(rs, k);
    const auto part = rs.omega_theta(rs.pi_word());
    std::ostringstream os;
    os << rs.label() << ": " << rs.num_positive() << " positive roots\n";
    os << "  " << list(rs, rs.positive_roots()) << "\n";
    const RootSet sigma = rs.companion_sigma();
    os << "companion Sigma (" << sigma.size() << "): " << list(rs, sigma) << "\n";
    os << "pi~ = " << word_text(rs.pi_word()) << "\n";
    for (std::size_t i = 0; i < part.omega.size(); ++i)
        os << "Omega_" << i << " (" << part.omega[i].size() << "): " << list(rs, part.omega[i]) << "\n";
    if (theta) {
        os << "Theta (" << part.theta.size() << "): " << list(rs, part.theta) << "\n";
        const std::string name = part.theta.empty() ? "empty" : sigma_name(rs, part.theta);
        if (!name.empty()) os << "Theta = " << name << "\n";
    }
    if (k > 0) {
        os << "Sigma_" << k << ": " << list(rs, rs.sigma_k(k)) << "\n";
        os << "Delta_" << k << ": " << list(rs, rs.delta_k(k)) << "\n";
    }
    return os.str();
}

RepKind verification_rep(const RootSystem& rs) {
    if (rs.type() == 'E' && rs.rank() < 8) return RepKind::Minuscule;
    return Rep::default_kind(rs);
}

std::string weight_diagram_dot(const RootSystem& rs, RepKind kind) {
    const Rep& rep = Rep::get(rs, kind);
    const int n = rep.dim();
    const int l = rs.rank();
    // weights of roots over the simple coroots
    auto root_weight = [&](int a) {
        std::vector<int> w(l, 0);
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < l; ++i) w[j] += rs.root(a)[i] * rs.cartan(i, j);
        return w;
    };
    std::set<std::vector<int>> sigma_weights;
    for (int a : rs.companion_sigma()) sigma_weights.insert(root_weight(a));

    std::vector<bool> marked(n, false);
    if (kind == RepKind::Adjoint) {
        for (int a : rs.companion_sigma()) marked[StructureConstants::get(rs).adjoint_index_of_root(a)] = true;
    } else {
        // lowest weight: killed by every E_{-alpha_i}
        std::vector<bool> hit(n, false);
        for (int i = 1; i <= l; ++i)
            for (const SparseEntry& e : rep.e(rs.neg(rs.simple(i))))
                if (e.val) hit[e.col] = true;
        int low = -1;
        for (int v = 0; v < n; ++v)
            if (!hit[v]) {
                low = v;
                break;
            }
        if (low >= 0)
            for (int v = 0; v < n; ++v) {
                std::vector<int> d(l);
                for (int j = 0; j < l; ++j) d[j] = rep.weight(v)[j] - rep.weight(low)[j];
                marked[v] = sigma_weights.count(d) > 0;
            }
    }

    std::ostringstream os;
    os << "digraph \"" << rs.label() << " " << rep.tag() << "\" {\n";
    os << "  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < n; ++v) {
        std::ostringstream lab;
        lab << "(";
        for (int j = 0; j < l; ++j) lab << (j ? "," : "") << rep.weight(v)[j];
        lab << ")";
        os << "  v" << v << " [label=\"" << lab.str() << "\"";
        if (marked[v]) os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
    }
    std::set<std::tuple<int, int, int>> edges;
    for (int i = 1; i <= l; ++i)
        for (const SparseEntry& e : rep.e(rs.simple(i)))
            if (e.val) edges.insert({e.col, e.row, i});
    for (const auto& [src, dst, i] : edges) {
        os << "  v" << src << " -> v" << dst << " [label=\"" << i << "\"";
        if (marked[src] && marked[dst]) os << ", penwidth=2";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace chev
