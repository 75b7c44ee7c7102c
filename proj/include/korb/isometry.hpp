#pragma once

#include "korb/lattice.hpp"

namespace korb {

enum class ScalarAction { plus_one, minus_one, general };

// Induced action on the discriminant group, recorded as the image of each
// generator plus a scalar summary when the action is +-identity.
struct DiscAction {
    std::vector<std::vector<Int>> generator_images;
    ScalarAction scalar = ScalarAction::plus_one;

    bool is_trivial() const { return scalar == ScalarAction::plus_one; }
};

struct Isometry {
    ZMat mat;
    int det = 1;  // +-1
    DiscAction disc_action;
    int orientation = 1;  // +-1, sign on a maximal positive-definite subspace
};

bool preserves_gram(const GramLattice& L, const ZMat& m);

// sign of the determinant of g projected to the cached positive-definite
// plane of L (projection along its orthogonal complement)
int orientation_sign(const GramLattice& L, const ZMat& m);

DiscAction disc_action(const GramLattice& L, const ZMat& m);

// validates m^T G m = G and fills in the cached invariants
Isometry make_isometry(const GramLattice& L, ZMat m);

// (a o b)(x) = a(b(x))
Isometry compose(const GramLattice& L, const Isometry& a, const Isometry& b);
Isometry inverse_isometry(const GramLattice& L, const Isometry& g);

ZVec apply_isometry(const Isometry& g, const ZVec& v);

}  // namespace korb
