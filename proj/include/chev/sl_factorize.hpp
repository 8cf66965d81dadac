#pragma once

#include "chev/comm_decomp.hpp"

namespace chev {

struct DeterminantNotOne : InvalidInput {
    using InvalidInput::InvalidInput;
};
struct UnsupportedMatrixInput : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Upper (or lower) unitriangular matrix as a word of root elements of A_{n-1} (natural module).
GenWord unitriangular_word(const Matrix& t, bool upper);

// g = u1 v1 u2 v2 for g in SL_n(R), R of stable rank 1. Throws NotUnimodular / NoWitness when the
// ring cannot supply a witness, DeterminantNotOne otherwise.
Quadruple factor_sl(const Matrix& g);

// factor_sl followed by decompose in type A_{n-1}
Decomposition decompose_matrix(const Matrix& g);

}  // namespace chev
