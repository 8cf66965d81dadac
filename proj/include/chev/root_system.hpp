#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace chev {

using Root = std::vector<int>;       // coefficients over the simple roots
using WeylWord = std::vector<int>;   // simple reflection indices, 1-based, applied right to left
using RootSet = std::vector<int>;    // sorted root indices

// Reduced irreducible root system, Bourbaki numbering.
// Root indices: positives 0..P-1 in height-then-lex order, then their negatives P..2P-1 in the same order.
class RootSystem {
public:
    // Cached; the returned reference lives for the whole program.
    static const RootSystem& get(char type, int rank);
    static const RootSystem& parse(const std::string& label);  // "A3", "E6", ...

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
    bool simply_laced() const { return type_ == 'A' || type_ == 'D' || type_ == 'E'; }

    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }
    int coxeter_number() const { return num_roots() / rank_; }
    const Root& root(int i) const { return roots_[i]; }
    int index_of(const Root& r) const;  // -1 if not a root
    int simple(int k) const { return simple_[k - 1]; }  // 1-based
    bool positive(int i) const { return i < num_positive(); }
    int neg(int i) const { return positive(i) ? i + num_positive() : i - num_positive(); }
    int height(int i) const { return height_[i]; }
    int highest() const { return num_positive() - 1; }
    int coeff(int i, int k) const { return roots_[i][k - 1]; }  // m_k, 1-based k

    int cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_i, alpha_j^vee>, 0-based
    int gram(int i, int j) const { return gram_[i][j]; }      // symmetric form on simple roots
    int inner(int a, int b) const;                            // (a, b) for root indices
    int norm2(int a) const { return norm2_[a]; }
    bool is_long(int a) const { return norm2_[a] == max_norm_; }
    // <beta, alpha> = 2(beta,alpha)/(alpha,alpha) = r - q for the alpha-string through beta
    int pairing(int beta, int alpha) const { return pairing_[beta][alpha]; }
    // r and q for the alpha-string beta - r alpha, ..., beta + q alpha
    std::pair<int, int> string(int beta, int alpha) const;
    int sum(int a, int b) const { return sum_[a][b]; }  // index of a+b or -1
    // alpha^vee over the simple coroots
    const std::vector<int>& coroot(int a) const { return coroot_[a]; }

    int reflect(int alpha, int beta) const;  // sigma_alpha(beta)
    int simple_reflect(int k, int beta) const { return sreflect_[k - 1][beta]; }
    int weyl_act(const WeylWord& w, int beta) const;
    // permutation of root indices for a word
    std::vector<int> weyl_perm(const WeylWord& w) const;
    // a reduced word for a permutation of roots coming from the Weyl group
    WeylWord reduced_word(const std::vector<int>& perm) const;
    WeylWord longest_word(const std::vector<int>& simple_subset = {}) const;

    RootSet sigma_k(int k) const;  // m_k >= 1
    RootSet delta_k(int k) const;  // m_k == 0
    RootSet positive_roots() const;
    RootSet all_roots() const;
    bool is_closed(const RootSet& s) const;
    bool is_unipotent(const RootSet& s) const;
    bool is_symmetric(const RootSet& s) const;

    WeylWord pi_word() const;
    struct Partition {
        std::vector<RootSet> omega;  // Omega_0..Omega_N
        RootSet theta;
    };
    Partition omega_theta(const WeylWord& w) const;
    RootSet companion_sigma() const;

    nlohmann::json root_json(int i) const;
    nlohmann::json set_json(const RootSet& s) const;
    int root_from_json(const nlohmann::json& j) const;
    std::string root_str(int i) const;

private:
    RootSystem(char type, int rank);
    void build_gram();
    void build_roots();

    char type_;
    int rank_;
    std::vector<std::vector<int>> gram_, cartan_;
    std::vector<Root> roots_;
    std::map<Root, int> index_;
    std::vector<int> simple_, height_, norm2_;
    int max_norm_ = 0;
    std::vector<std::vector<int>> pairing_, sum_, sreflect_, coroot_;
};

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b);  // a after b

}  // namespace chev
