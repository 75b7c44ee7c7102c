#pragma once

#include <optional>

#include "korb/eichler.hpp"
#include "korb/isometry.hpp"

namespace korb {

// The rank-8 unimodular lattice U^4, basis u1,f1,u2,f2,u3,f3,u4,f4.
GramLattice mukai_lattice();

// U^3 + <-2n-2>, rank 7, basis u1,f1,u2,f2,u3,f3,e with q(e) = -2n-2.
// The first four basis vectors form the U^2 summand the reduction needs.
GramLattice kummer_lattice(int n);

// triple (r, D, s) with square D^2 - 2rs; D lives in U^3
struct MukaiVector {
    Int r;
    ZVec d;  // 6 coordinates
    Int s;

    Int square() const;
    bool operator==(const MukaiVector&) const = default;
};

// coordinates in mukai_lattice: (D, r, -s), so the last hyperbolic plane
// carries the (r, s) part with pairing -rs' - sr'
ZVec mukai_coords(const MukaiVector& m);
MukaiVector from_mukai_coords(const ZVec& coords);

// (1, 0, -n-1)
MukaiVector mukai_vn(int n);

// U^3-part goes through unchanged; coefficient c of e goes to r = c,
// s = c(n+1).  The image is orthogonal to mukai_vn(n) and has the same
// square as its argument.
MukaiVector embed_h2(int n, const ZVec& h);

// reflection in e: negates the last coordinate; det -1, disc action -1
Isometry reflection_en(int n);

// det * disc-scalar = +1; false when the disc action is not a scalar
bool is_monodromy(const Isometry& g);

// c mod 2n+2 with [h/div(h)] = c * [e/(2n+2)] in the discriminant group;
// equals mu * (2n+2)/div(h) for mu the e-coefficient of h
Int disc_class_coefficient(int n, const ZVec& h);

// orbit label (t, beta, m, d') of a primitive positive-square class
struct PolarizationType {
    int n = 0;
    Int square = 0;
    Int t = 1;
    Int beta = 0;
    Int m = 0;
    Int d_prime = 1;

    bool operator==(const PolarizationType&) const = default;
};

// throws invalid_argument naming the violated constraint
void validate_polarization_type(const PolarizationType& p);

// classify h: t = divisibility, beta = mu*m mod 2n+2 folded into
// {0,...,n+1}, d' from the square identity.  The classification theorem
// assumes n > 1; pass allow_n1 to run the same arithmetic at n = 1.
PolarizationType normal_form(int n, const ZVec& h, bool allow_n1 = false);

// t*(u1 + d'*f1) + (beta/m)*e; round-trips through normal_form
ZVec realize(const PolarizationType& p);

// same square and same normal form
bool equivalent(int n, const ZVec& h1, const ZVec& h2, bool allow_n1 = false);

// all types with the given square, sorted by (t, beta)
std::vector<PolarizationType> orbit_enumerate(int n, const Int& square);

// canonical form of (saturation of span{v_n, embed(h)}, v_n, +-h) in U^4
struct SaturatedPairInvariant {
    ZMat gram2 = ZMat(2, 2);
    ZVec v_coords;
    ZVec h_coords;

    bool operator==(const SaturatedPairInvariant&) const = default;
};

SaturatedPairInvariant saturation_invariant(int n, const ZVec& h);

// monodromy carrying h to realize(normal_form(h)): a transvection chain,
// composed with reflection_en when the discriminant class needs the fold
Isometry monodromy_to_normal_form(int n, const ZVec& h, bool allow_n1 = false);

// monodromy g with g(h1) = h2 when the normal forms agree, nullopt otherwise
std::optional<Isometry> monodromy_between(int n, const ZVec& h1, const ZVec& h2,
                                          bool allow_n1 = false);

}  // namespace korb
