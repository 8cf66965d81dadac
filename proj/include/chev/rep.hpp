#pragma once

#include <string>
#include <vector>

#include "chev/lie.hpp"
#include "chev/matrix.hpp"
#include "chev/word.hpp"

namespace chev {

enum class RepKind { NaturalA, NaturalC, VectorB, VectorD, Adjoint, Minuscule };

struct UnsupportedRep : InvalidInput {
    using InvalidInput::InvalidInput;
};

// An integral form of a module: integer matrices E_a for every root, exponentiated on demand.
class Rep {
public:
    static const Rep& get(const RootSystem& rs, RepKind kind);
    static RepKind default_kind(const RootSystem& rs);
    static std::vector<RepKind> supported(const RootSystem& rs);
    static RepKind parse_kind(const std::string& s);
    static std::string kind_name(RepKind k);

    const RootSystem& roots() const { return rs_; }
    RepKind kind() const { return kind_; }
    std::string tag() const;
    int dim() const { return dim_; }
    // Images equal => elements equal (the module is faithful on the centre).
    bool center_faithful() const;
    // The central sign -1 of type A with even n can be represented.
    bool supports_center_sign() const;

    const Sparse& e(int root) const { return e_[root]; }
    // <weight of basis vector i, root^vee>
    int weight_pairing(int basis, int root) const;
    const std::vector<int>& weight(int basis) const { return weights_[basis]; }  // over simple coroots

    Matrix gen_matrix(const Token& t, const Ring& r) const;
    Matrix eval(const GenWord& w, const Ring& r) const;
    // M <- M * token
    void apply_right(Matrix& m, const Token& t) const;
    // v <- token * v
    void apply_vec(std::vector<Elem>& v, const Token& t, const Ring& r) const;
    // v <- word * v
    void apply_word_vec(std::vector<Elem>& v, const GenWord& w, const Ring& r) const;
    // Number of failures of [E_a, E_b] = N(a,b) E_{a+b} and [E_a, E_-a] = H_a.
    int relation_failures() const;

private:
    Rep(const RootSystem& rs, RepKind kind);
    void build_from_simple(const std::vector<std::vector<std::vector<std::int64_t>>>& es,
                           const std::vector<std::vector<std::vector<std::int64_t>>>& fs);
    void build_adjoint();
    void finish();

    struct Step {
        int target;
        int source;
        int power;
        std::int64_t val;
    };
    void apply_x_right(Matrix& m, int root, Elem t) const;
    void apply_x_vec(std::vector<Elem>& v, int root, Elem t, const Ring& r) const;

    const RootSystem& rs_;
    RepKind kind_;
    int dim_ = 0;
    std::vector<Sparse> e_;
    std::vector<std::vector<int>> weights_;
    // exp(t E_a) = I + sum_k t^k E_a^k / k!, entries ordered so in-place updates are safe
    std::vector<std::vector<Step>> right_steps_, left_steps_;
};

}  // namespace chev
