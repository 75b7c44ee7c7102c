#include "korb/divisors.hpp"

#include <stdexcept>

namespace korb {

namespace {

void require_k(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (k < 1 || k > n + 1) throw std::invalid_argument("k must lie in 1..n+1");
}

}  // namespace

CurveClass curve_class(int n, int k, bool reduced) {
    require_k(n, k);
    return CurveClass{n, 1, reduced ? Int(-(2 * k - 1)) : Int(-2 * k)};
}

DivisorClass dual_divisor(const CurveClass& c) {
    DivisorClass d;
    d.n = c.n;
    d.h_coeff = rat_of(c.a_h);
    d.delta_coeff = Rat(c.b_r, 2 * (Int(c.n) + 1));
    d.delta_coeff.canonicalize();
    return d;
}

Rat divisor_square(int n, int k, const Int& p_a, bool reduced) {
    require_k(n, k);
    if (p_a < 2) throw std::invalid_argument("arithmetic genus must be at least 2");
    // closed formula, with k replaced by (2k-1)/2 for the reduced curve
    Rat kappa = reduced ? Rat(2 * k - 1, 2) : rat_of(k);
    Rat by_formula = rat_of(2 * p_a - 2) - 2 * kappa * kappa / rat_of(Int(n) + 1);
    by_formula.canonicalize();

    // same number from the Gram form diag(2pA-2, -2n-2) on (H_A, delta_n)
    DivisorClass d = dual_divisor(curve_class(n, k, reduced));
    Rat by_gram = d.h_coeff * d.h_coeff * rat_of(2 * p_a - 2) +
                  d.delta_coeff * d.delta_coeff * rat_of(-2 * (Int(n) + 1));
    by_gram.canonicalize();
    if (by_formula != by_gram) throw std::logic_error("divisor square: the two computations disagree");
    return by_formula;
}

PrimitiveMultiple primitive_multiple(int n, int k, bool reduced) {
    require_k(n, k);
    Int num = reduced ? Int(2 * k - 1) : Int(k);
    Int den = reduced ? Int(2 * (n + 1)) : Int(n + 1);
    PrimitiveMultiple pm;
    pm.lambda = gcd(num, den);
    pm.s = exact_div(num, pm.lambda);
    pm.t = exact_div(den, pm.lambda);
    return pm;
}

UniruledDivisorClass uniruled_divisor_class(int n, int k, const Int& p_a, bool reduced) {
    require_k(n, k);
    if (p_a < Int(k) + 2) throw std::invalid_argument("arithmetic genus must be at least k+2");
    UniruledDivisorClass u;
    u.n = n;
    u.k = k;
    u.reduced = reduced;
    u.p_a = p_a;
    u.divisor = dual_divisor(curve_class(n, k, reduced));
    u.square = divisor_square(n, k, p_a, reduced);
    u.multiple = primitive_multiple(n, k, reduced);
    return u;
}

PolarizationType divisor_invariant(int n, int k, const Int& p_a, bool reduced) {
    require_k(n, k);
    if (p_a < Int(k) + 2) throw std::invalid_argument("arithmetic genus must be at least k+2");
    PrimitiveMultiple pm = primitive_multiple(n, k, reduced);
    // t*D_k = t*H_A - s*delta_n with H_A = u1 + (pA-1)f1
    ZVec h(7, 0);
    h[0] = pm.t;
    h[1] = pm.t * (p_a - 1);
    h[6] = -pm.s;
    GramLattice L = kummer_lattice(n);
    if (L.divisibility(h) != pm.t) throw std::logic_error("embedded divisor has unexpected divisibility");
    return normal_form(n, h, /*allow_n1=*/true);
}

Int brill_noether_rho(const Int& g, const Int& r, const Int& d) {
    return g - (r + 1) * (g - d + r);
}

bool CoverageReport::has_gaps() const {
    for (const auto& e : types)
        if (e.status == CoverageStatus::gap) return true;
    return false;
}

CoverageReport coverage(int n, const Int& d_max) {
    if (n < 2) throw std::invalid_argument("coverage assumes n > 1");
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const Int period = 2 * (Int(n) + 1);

    CoverageReport report;
    report.n = n;
    report.d_max = d_max;
    for (Int t = 1; t <= period; ++t) {
        if (!divides(t, period)) continue;
        const Int m = exact_div(period, t);
        for (Int beta = 0; beta <= Int(n) + 1; ++beta) {
            if (beta == 0) {
                if (t != 1) continue;
            } else if (gcd(beta, period) != m) {
                continue;
            }
            Int bm = beta == 0 ? Int(0) : exact_div(beta, m);
            Int d_floor = fdiv(bm * bm * period, 2 * t * t);
            Int d_min = d_floor + 1;  // smallest d' giving positive square
            CoverageEntry entry;
            entry.t = t;
            entry.beta = beta;
            entry.min_square = 2 * t * t * d_min - bm * bm * period;
            if (entry.min_square > 2 * d_max) {
                entry.status = CoverageStatus::square_limited;
            } else {
                entry.status = CoverageStatus::gap;
                for (int k = 1; k <= n + 1 && !entry.witness; ++k) {
                    for (bool reduced : {false, true}) {
                        PolarizationType p = divisor_invariant(n, k, Int(k) + 2, reduced);
                        if (p.t == t && p.beta == beta) {
                            entry.witness = CoverageWitness{k, reduced, Int(k) + 2};
                            entry.status = CoverageStatus::witnessed;
                            break;
                        }
                    }
                }
            }
            report.types.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace korb
