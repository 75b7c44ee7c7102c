#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "korb/smith.hpp"

namespace korb {

class GramLattice;

// Element of the discriminant group L^vee / L, stored as one residue per
// invariant factor together with the value of the quadratic form in Q/2Z
// (representative in [0, 2)).
struct DiscClass {
    std::vector<Int> components;
    Rat q_value;

    bool operator==(const DiscClass& o) const { return components == o.components; }
    bool operator!=(const DiscClass& o) const { return !(*this == o); }
    bool is_trivial() const {
        for (const Int& c : components)
            if (c != 0) return false;
        return true;
    }
};

struct DiscriminantGroup {
    std::vector<Int> invariant_factors;  // entries > 1 in divisibility chain order
    std::vector<QVec> generators;        // rational coordinates in the lattice basis
    Int order;

    // presentation data from the Smith decomposition of the Gram matrix,
    // kept so arbitrary dual vectors can be expressed in the generators
    ZMat snf_left;
    std::vector<Int> snf_diag;
    std::vector<int> slots;  // positions of the nontrivial diagonal entries

    Int exponent() const { return invariant_factors.empty() ? Int(1) : invariant_factors.back(); }

    // x must lie in L^vee (integral pairing with the basis)
    DiscClass class_of_dual(const GramLattice& L, const QVec& x) const;
    DiscClass class_from_components(const GramLattice& L, std::vector<Int> comp) const;
    QVec representative(const std::vector<Int>& comp) const;
    Int order_of(const DiscClass& c) const;
    DiscClass negate(const GramLattice& L, const DiscClass& c) const;
    DiscClass scale(const GramLattice& L, const DiscClass& c, const Int& k) const;
};

// Even nondegenerate lattice presented by its Gram matrix on a fixed basis.
// Value type with a shared immutable payload; the discriminant group and a
// rational basis of a maximal positive-definite subspace are computed once
// per lattice and cached.
class GramLattice {
  public:
    explicit GramLattice(ZMat gram);

    int rank() const;
    const ZMat& gram() const;
    std::pair<int, int> signature() const;

    Int inner(const ZVec& v, const ZVec& w) const;
    Int q(const ZVec& v) const { return inner(v, v); }
    Rat inner_q(const QVec& v, const QVec& w) const;
    Rat q_q(const QVec& v) const { return inner_q(v, v); }

    // positive generator of the ideal (v, L); v != 0
    Int divisibility(const ZVec& v) const;

    const DiscriminantGroup& disc_group() const;
    // columns = rational basis of a maximal positive-definite subspace,
    // pairwise orthogonal; deterministic pivoting
    const QMat& positive_plane() const;

    bool operator==(const GramLattice& o) const;
    bool operator!=(const GramLattice& o) const { return !(*this == o); }

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

GramLattice hyperbolic_u();
GramLattice rank_one(const Int& diag);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

bool is_primitive(const ZVec& v);

// class of v / div(v) in the discriminant group; v primitive
DiscClass disc_class(const GramLattice& L, const ZVec& v);

// basis of the saturation of the span, rows in Hermite normal form
std::vector<ZVec> saturate(const GramLattice& L, const std::vector<ZVec>& span_vectors);

// integer coordinates of v in the given independent rows, if any
std::optional<ZVec> integer_coords_in(const std::vector<ZVec>& rows, const ZVec& v);

}  // namespace korb
