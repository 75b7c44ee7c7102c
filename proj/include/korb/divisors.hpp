#pragma once

#include <optional>

#include "korb/kummer.hpp"

namespace korb {

// integer class a*H_A + b*r_n, with r_n the half fiber class dual to the
// exceptional divisor
struct CurveClass {
    int n = 0;
    Int a_h = 0;
    Int b_r = 0;

    bool operator==(const CurveClass&) const = default;
};

// rational class on the basis (H_A, delta_n)
struct DivisorClass {
    int n = 0;
    Rat h_coeff = 0;
    Rat delta_coeff = 0;

    bool operator==(const DivisorClass&) const = default;
};

// H_A - 2k r_n for the irreducible rational curve, H_A - (2k-1) r_n for the
// reduced two-component one; 1 <= k <= n+1
CurveClass curve_class(int n, int k, bool reduced);

// duality against the Beauville-Bogomolov form: H_A stays, r_n goes to
// delta_n / (2n+2)
DivisorClass dual_divisor(const CurveClass& c);

// q of the dual divisor with q(H_A) = 2pA - 2, computed both by the closed
// formula and by the rank-2 Gram form; the two must agree
Rat divisor_square(int n, int k, const Int& p_a, bool reduced);

struct PrimitiveMultiple {
    Int lambda = 1;
    Int s = 0;
    Int t = 1;

    bool operator==(const PrimitiveMultiple&) const = default;
};

// smallest t with t*D_k integral: t*D_k = t*H_A - s*delta_n, gcd(s,t) = 1
PrimitiveMultiple primitive_multiple(int n, int k, bool reduced);

struct UniruledDivisorClass {
    int n = 0;
    int k = 0;
    bool reduced = false;
    Int p_a = 0;
    DivisorClass divisor;
    Rat square = 0;
    PrimitiveMultiple multiple;
};

UniruledDivisorClass uniruled_divisor_class(int n, int k, const Int& p_a, bool reduced);

// embeds t*D_k with H_A = u1 + (pA-1)f1 and classifies it; divisibility of
// the embedded vector equals t
PolarizationType divisor_invariant(int n, int k, const Int& p_a, bool reduced);

// g - (r+1)(g - d + r)
Int brill_noether_rho(const Int& g, const Int& r, const Int& d);

struct CoverageWitness {
    int k = 0;
    bool reduced = false;
    Int p_a = 0;
};

enum class CoverageStatus { witnessed, square_limited, gap };

struct CoverageEntry {
    Int t = 1;
    Int beta = 0;
    Int min_square = 0;  // smallest positive square admitting this type
    CoverageStatus status = CoverageStatus::gap;
    std::optional<CoverageWitness> witness;
};

struct CoverageReport {
    int n = 0;
    Int d_max = 0;
    std::vector<CoverageEntry> types;

    bool has_gaps() const;
};

// for every (t, beta) pair valid for this n: if the type occurs at some
// square <= 2*dMax, search k in 1..n+1 and both curve types (at pA = k+2)
// for a divisor_invariant matching it; types out of square range are
// square-limited, matched ones witnessed, the rest gaps
CoverageReport coverage(int n, const Int& d_max);

}  // namespace korb
