#pragma once

#include "korb/isometry.hpp"

namespace korb {

// Eichler transvection t_{e,a}: x |-> x - (a,x)e + (e,x)a - (a,a)/2 (e,x)e,
// for isotropic e and a orthogonal to e.  Always has det +1, trivial action
// on the discriminant group and orientation +1.
Isometry transvection(const GramLattice& L, const ZVec& e, const ZVec& a);
ZMat transvection_matrix(const GramLattice& L, const ZVec& e, const ZVec& a);

// The reduction machinery requires the first four basis vectors to span two
// orthogonal hyperbolic planes (Gram [[0,1],[1,0]] each), orthogonal to the
// rest of the basis.
bool has_u2_prefix(const GramLattice& L);
void require_u2_prefix(const GramLattice& L);

// Eichler's criterion: primitive vectors with equal square and equal
// discriminant class lie in one orbit of the transvection group.
bool eichler_equivalent(const GramLattice& L, const ZVec& v, const ZVec& w);

// canonical orbit representative: t*e1 + t*k*f1 + xi, where t is the order
// of the class, xi realizes the class inside the U^2-complement and
// k = (square - q(xi)) / (2 t^2)
ZVec canonical_transvection_rep(const GramLattice& L, const Int& square, const DiscClass& cls);

struct ReductionResult {
    ZMat g;          // product of the applied transvections
    ZVec canonical;  // g * v
    int transvection_count = 0;
};

// transvection chain carrying v to canonical_transvection_rep(q(v), [v])
ReductionResult reduce_to_canonical(const GramLattice& L, const ZVec& v);

// isometry with g(v) = w, det +1, trivial discriminant action, orientation
// +1, as a composition of transvections; v, w must be eichler_equivalent
Isometry construct_isometry(const GramLattice& L, const ZVec& v, const ZVec& w);

}  // namespace korb
