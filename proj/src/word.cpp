#include "chev/word.hpp"

#include <sstream>

namespace chev {

GenWord& GenWord::operator*=(const GenWord& o) {
    tokens.insert(tokens.end(), o.tokens.begin(), o.tokens.end());
    center *= o.center;
    return *this;
}

GenWord inverse(const GenWord& w, const Ring& r) {
    GenWord out;
    out.center = w.center;
    out.tokens.reserve(w.tokens.size());
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        Token t = *it;
        // x(t)^-1 = x(-t), w(u)^-1 = w(-u), h(u)^-1 = h(u^-1)
        t.t = t.kind == Tok::H ? r.inv(t.t) : r.neg(t.t);
        out.tokens.push_back(t);
    }
    return out;
}

GenWord commutator(const GenWord& a, const GenWord& b, const Ring& r) {
    GenWord out = a * b;
    out *= inverse(a, r);
    out *= inverse(b, r);
    return out;
}

GenWord conjugate(const GenWord& a, const GenWord& b, const Ring& r) {
    GenWord out = a * b;
    out *= inverse(a, r);
    return out;
}

nlohmann::json word_to_json(const GenWord& w, const RootSystem& rs, const Ring& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Token& t : w.tokens) {
        switch (t.kind) {
            case Tok::X:
                arr.push_back({{"k", "x"}, {"a", rs.root(t.root)}, {"t", r.elem_to_json(t.t)}});
                break;
            case Tok::W:
                arr.push_back({{"k", "w"}, {"a", rs.root(t.root)}, {"u", r.elem_to_json(t.t)}});
                break;
            case Tok::H:
                arr.push_back({{"k", "h"}, {"a", rs.root(t.root)}, {"u", r.elem_to_json(t.t)}});
                break;
        }
    }
    if (w.center != 1) arr.push_back({{"center", w.center}});
    return arr;
}

GenWord word_from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r) {
    if (!j.is_array()) throw InvalidInput("word must be a JSON array");
    GenWord w;
    for (const auto& item : j) {
        if (!item.is_object()) throw InvalidInput("word token must be an object");
        if (item.contains("center")) {
            int c = item.at("center").get<int>();
            if (c != 1 && c != -1) throw InvalidInput("center flag must be +1 or -1");
            w.center *= c;
            continue;
        }
        if (!item.contains("k") || !item.contains("a")) throw InvalidInput("token needs \"k\" and \"a\"");
        const std::string k = item.at("k").get<std::string>();
        const int root = rs.root_from_json(item.at("a"));
        if (k == "x") {
            if (!item.contains("t")) throw InvalidInput("x token needs \"t\"");
            w.tokens.push_back({Tok::X, root, r.elem_from_json(item.at("t"))});
        } else if (k == "w" || k == "h") {
            if (!item.contains("u")) throw InvalidInput(k + " token needs \"u\"");
            Elem u = r.elem_from_json(item.at("u"));
            if (!r.is_unit(u)) throw InvalidInput(k + " token parameter must be a unit");
            w.tokens.push_back({k == "w" ? Tok::W : Tok::H, root, u});
        } else {
            throw InvalidInput("unknown token kind '" + k + "'");
        }
    }
    return w;
}

std::string word_str(const GenWord& w, const RootSystem& rs, const Ring& r) {
    std::ostringstream os;
    if (w.center == -1) os << "(-1)";
    for (const Token& t : w.tokens) {
        const char* k = t.kind == Tok::X ? "x" : t.kind == Tok::W ? "w" : "h";
        os << k << "_" << rs.root_str(t.root) << "(" << r.str(t.t) << ")";
    }
    return os.str();
}

}  // namespace chev
