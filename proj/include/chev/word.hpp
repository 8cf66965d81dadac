#pragma once

#include <vector>

#include <json.hpp>

#include "chev/ring.hpp"
#include "chev/root_system.hpp"

namespace chev {

enum class Tok : std::uint8_t { X, W, H };

// x_root(t), w_root(t) or h_root(t); t must be a unit for W and H.
struct Token {
    Tok kind;
    int root;
    Elem t;
    friend bool operator==(const Token&, const Token&) = default;
};

// Product of tokens, left to right, times a central sign (+1/-1).
struct GenWord {
    std::vector<Token> tokens;
    int center = 1;

    static GenWord x(int root, Elem t) { return GenWord{{Token{Tok::X, root, t}}, 1}; }
    static GenWord w(int root, Elem u) { return GenWord{{Token{Tok::W, root, u}}, 1}; }
    static GenWord h(int root, Elem u) { return GenWord{{Token{Tok::H, root, u}}, 1}; }

    bool empty() const { return tokens.empty() && center == 1; }
    std::size_t size() const { return tokens.size(); }
    GenWord& operator*=(const GenWord& o);
    friend GenWord operator*(GenWord a, const GenWord& b) { return a *= b; }
    friend bool operator==(const GenWord&, const GenWord&) = default;
};

GenWord inverse(const GenWord& w, const Ring& r);
GenWord commutator(const GenWord& a, const GenWord& b, const Ring& r);  // a b a^-1 b^-1
GenWord conjugate(const GenWord& a, const GenWord& b, const Ring& r);   // a b a^-1

// JSON: array of {"k":"x","a":[...],"t":..} / {"k":"w"|"h","a":[...],"u":..}, plus a trailing {"center":-1}.
nlohmann::json word_to_json(const GenWord& w, const RootSystem& rs, const Ring& r);
GenWord word_from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r);
std::string word_str(const GenWord& w, const RootSystem& rs, const Ring& r);

}  // namespace chev
