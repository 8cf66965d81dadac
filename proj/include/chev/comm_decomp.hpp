#pragma once

#include <optional>
#include <vector>

#include "chev/companion.hpp"

namespace chev {

using IntMat = std::vector<std::vector<std::int64_t>>;

// det(m), and adj = det * m^-1 (zero when singular)
std::int64_t int_adjugate(const IntMat& m, IntMat& adj);

struct CommPair {
    GenWord a, b;
};

// Block-diagonal g with g - 1 invertible over Z, as a word over A_l (natural module of size l+1).
struct GMinusOne {
    GenWord g;
    IntMat gmat;
    IntMat inv_g_minus_1;
};
GMinusOne g_minus_one(int l);

// Product of transvections (and one torus fix) equal to an SL_{k+1}(Z) matrix, realized on the
// chain of simple roots `chain` (consecutive, connected, simply laced among themselves).
GenWord sl_word_on_chain(const RootSystem& rs, const std::vector<int>& chain, const IntMat& m, const Ring& r);
// Block-diagonal g of g_minus_one(chain.size()) on that chain.
GenWord g_minus_one_on_chain(const RootSystem& rs, const std::vector<int>& chain, const Ring& r);

// Solver for [g, Y] = theta with Y in U(S), S = union of layers; g normalizes U(S) and preserves layers.
class LayerSolver {
public:
    LayerSolver(const RootSystem& rs, const GenWord& g_int, std::vector<std::vector<int>> layers);
    const std::vector<int>& order() const { return order_; }
    const std::vector<std::vector<int>>& layers() const { return layers_; }
    // det(A_k - I) over Z
    std::int64_t det(std::size_t k) const { return det_[k]; }
    // Extends y (a word over S) layer by layer from `first` on; g_r is g over r (possibly perturbed
    // by elements acting trivially on the layer quotients). Returns false if some layer is unsolvable.
    bool solve(const GenWord& g_r, const GenWord& theta, GenWord& y, const Ring& r, std::size_t first = 0,
               std::size_t last = static_cast<std::size_t>(-1)) const;
    // layer-k coordinates of ([g_r, y]^-1 theta)
    std::vector<Elem> residual(const GenWord& g_r, const GenWord& theta, const GenWord& y, std::size_t k, const Ring& r) const;

private:
    const RootSystem& rs_;
    std::vector<std::vector<int>> layers_;
    std::vector<int> order_;
    std::vector<IntMat> adj_;  // adjugate of A_k - I
    std::vector<std::int64_t> det_;
};

// theta in U(Sigma) as commutator pairs; empty for theta = 1. Throws RingCapabilityError when the
// ring lacks what the type needs (2 invertible for B2, C2, G2).
std::vector<CommPair> sigma_to_commutators(const RootSystem& rs, const UnipotentVector& theta, const Ring& r);
int sigma_commutator_bound(const RootSystem& rs);  // 1, 2 or 3
int commutator_width_bound(const RootSystem& rs);  // 3, 4 or 5

// center * conjugator * prod [a_i, b_i] * conjugator^-1
struct Decomposition {
    int center = 1;
    GenWord conjugator;
    std::vector<CommPair> pairs;

    GenWord product(const Ring& r) const;
    nlohmann::json to_json(const RootSystem& rs, const Ring& r) const;
    static Decomposition from_json(const nlohmann::json& j, const RootSystem& rs, const Ring& r);
};

struct Quadruple {
    GenWord u1, v1, u2, v2;  // u in U+, v in U-
    int center = 1;          // the element is center * u1 v1 u2 v2
    GenWord word() const;
};

Decomposition decompose(const RootSystem& rs, const Quadruple& q, const Ring& r);
// u v with u in U+, v in U-: at most width - 1 commutators.
Decomposition decompose_short(const RootSystem& rs, const GenWord& u, const GenWord& v, const Ring& r);

enum class VerifyResult { Exact, EqualModCenter, Mismatch };
std::string verify_result_name(VerifyResult v);
VerifyResult verify(const RootSystem& rs, const Ring& r, RepKind rep, const GenWord& original, const Decomposition& d);

}  // namespace chev
