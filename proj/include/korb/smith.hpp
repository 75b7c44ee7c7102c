#pragma once

#include "korb/matrix.hpp"

namespace korb {

// left * m * right = diag, with |det(left)| = |det(right)| = 1, diag
// rectangular-diagonal with non-negative entries d_1 | d_2 | ... .
struct SmithDecomposition {
    ZMat left;
    ZMat diag;
    ZMat right;

    std::vector<Int> diagonal() const;
    // diagonal entries > 1, in chain order
    std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const ZMat& m);

// Row-style Hermite normal form of a full-row-rank integer matrix: pivots
// positive, entries above each pivot reduced into [0, pivot), pivot columns
// strictly increasing.  The row span is unchanged; the result is the unique
// canonical basis of that span.
ZMat hermite_row_basis(const ZMat& rows);

}  // namespace korb
