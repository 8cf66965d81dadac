#pragma once

#include <string>

#include "chev/comm_decomp.hpp"

namespace chev {

// {"u1": word, "v1": word, "u2": word, "v2": word, "center": +-1}; missing blocks are empty.
nlohmann::json quadruple_to_json(const Quadruple& q, const RootSystem& rs, const Ring& r);
Quadruple quadruple_from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r);

// Splits a word of x-tokens into alternating blocks U+ U- U+ U-. Throws InvalidInput when the word
// needs more than four blocks or carries w/h tokens.
Quadruple split_alternating(const RootSystem& rs, const GenWord& w);

// Root-system report: positive roots, companion Sigma, the pi~ partition; Sigma_k / Delta_k when k > 0.
nlohmann::json roots_report(const RootSystem& rs, int k, bool theta);
std::string roots_text(const RootSystem& rs, int k, bool theta);

// Weight diagram of a module in DOT. Nodes are basis vectors labelled by their weights, edges
// v -> E_{alpha_i} v labelled i. Nodes tied to the companion Sigma are filled black: in the
// adjoint module the roots of Sigma, elsewhere the weights lambda with lambda - (lowest weight) in Sigma.
std::string weight_diagram_dot(const RootSystem& rs, RepKind kind);

// The module used for verification when none is asked for: exact on the centre where one is available.
RepKind verification_rep(const RootSystem& rs);

}  // namespace chev
