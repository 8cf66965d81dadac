#pragma once

#include <cstdint>
#include <vector>

#include "chev/root_system.hpp"

namespace chev {

struct SparseEntry {
    int row;
    int col;
    std::int64_t val;
};
using Sparse = std::vector<SparseEntry>;

// Chevalley basis structure constants N(a,b): [e_a, e_b] = N(a,b) e_{a+b}.
// Extraspecial pairs get +(r+1); everything else follows from the usual identities.
class StructureConstants {
public:
    static const StructureConstants& get(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    int N(int a, int b) const { return table_[a][b]; }  // 0 when a+b is not a root
    // (simple root, rest) for a positive non-simple root
    std::pair<int, int> extraspecial(int xi) const { return extraspecial_[xi]; }

    // Adjoint module: basis = negative roots (most negative first), h_1..h_l, positive roots.
    int adjoint_dim() const { return rs_.num_roots() + rs_.rank(); }
    int adjoint_index_of_root(int a) const { return root_pos_[a]; }
    int adjoint_index_of_h(int j) const { return rs_.num_positive() + j; }  // j 0-based
    // ad e_a as a sparse integer matrix
    Sparse ad(int a) const;
    // Checks [ad e_a, ad e_b] = ad [e_a, e_b] for all pairs; returns the number of failures.
    int jacobi_failures() const;

private:
    explicit StructureConstants(const RootSystem& rs);
    int general(int a, int b) const;

    const RootSystem& rs_;
    std::vector<std::vector<int>> table_;
    std::vector<std::pair<int, int>> extraspecial_;
    std::vector<int> root_pos_;
};

}  // namespace chev
