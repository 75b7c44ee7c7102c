#include "korb/kummer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace korb {

namespace {

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

void require_kummer_vector(const ZVec& h) {
    if (h.size() != 7) throw std::invalid_argument("expected 7 coordinates (u1,f1,u2,f2,u3,f3,e)");
}

Int two_n_plus_2(int n) { return Int(2 * n + 2); }

}  // namespace

GramLattice mukai_lattice() {
    GramLattice u = hyperbolic_u();
    return direct_sum(direct_sum(u, u), direct_sum(u, u));
}

GramLattice kummer_lattice(int n) {
    require_n(n);
    GramLattice u = hyperbolic_u();
    return direct_sum(direct_sum(u, u), direct_sum(u, rank_one(-two_n_plus_2(n))));
}

Int MukaiVector::square() const {
    Int dd = 2 * (d[0] * d[1] + d[2] * d[3] + d[4] * d[5]);
    return dd - 2 * r * s;
}

ZVec mukai_coords(const MukaiVector& m) {
    ZVec c(8, 0);
    for (int i = 0; i < 6; ++i) c[i] = m.d[i];
    c[6] = m.r;
    c[7] = -m.s;
    return c;
}

MukaiVector from_mukai_coords(const ZVec& coords) {
    if (coords.size() != 8) throw std::invalid_argument("expected 8 coordinates");
    MukaiVector m;
    m.d = ZVec(coords.begin(), coords.begin() + 6);
    m.r = coords[6];
    m.s = -coords[7];
    return m;
}

MukaiVector mukai_vn(int n) {
    require_n(n);
    return MukaiVector{1, ZVec(6, 0), -(Int(n) + 1)};
}

MukaiVector embed_h2(int n, const ZVec& h) {
    require_n(n);
    require_kummer_vector(h);
    MukaiVector m;
    m.d = ZVec(h.begin(), h.begin() + 6);
    m.r = h[6];
    m.s = h[6] * (Int(n) + 1);
    return m;
}

Isometry reflection_en(int n) {
    GramLattice L = kummer_lattice(n);
    ZMat m = ZMat::identity(7);
    m.at(6, 6) = -1;
    return make_isometry(L, m);
}

bool is_monodromy(const Isometry& g) {
    if (g.disc_action.scalar == ScalarAction::plus_one) return g.det == 1;
    if (g.disc_action.scalar == ScalarAction::minus_one) return g.det == -1;
    return false;
}

Int disc_class_coefficient(int n, const ZVec& h) {
    require_n(n);
    require_kummer_vector(h);
    if (!is_primitive(h)) throw std::invalid_argument("vector must be primitive");
    const Int period = two_n_plus_2(n);
    const Int t = kummer_lattice(n).divisibility(h);
    if (!divides(t, period)) throw std::logic_error("divisibility does not divide 2n+2");
    return mod_pos(h[6] * exact_div(period, t), period);
}

void validate_polarization_type(const PolarizationType& p) {
    if (p.n < 1) throw std::invalid_argument("polarization type: n must be at least 1");
    const Int period = two_n_plus_2(p.n);
    if (p.square <= 0 || !divides(2, p.square))
        throw std::invalid_argument("polarization type: square must be even and positive");
    if (p.t < 1 || !divides(p.t, period))
        throw std::invalid_argument("polarization type: t must be a positive divisor of 2n+2");
    if (p.beta < 0 || p.beta > Int(p.n) + 1)
        throw std::invalid_argument("polarization type: beta out of range");
    if ((p.beta == 0) != (p.t == 1))
        throw std::invalid_argument("polarization type: beta = 0 exactly when t = 1");
    Int expected_m = p.beta == 0 ? period : gcd(p.beta, period);
    if (p.m != expected_m) throw std::invalid_argument("polarization type: m must be gcd(2n+2, beta)");
    if (p.beta > 0 && p.m != exact_div(period, p.t))
        throw std::invalid_argument("polarization type: gcd(beta, 2n+2) must equal (2n+2)/t");
    Int bm = p.beta == 0 ? Int(0) : exact_div(p.beta, p.m);
    if (gcd(p.t, bm) != 1) throw std::invalid_argument("polarization type: gcd(t, beta/m) must be 1");
    if (p.d_prime < 1) throw std::invalid_argument("polarization type: d_prime must be positive");
    if (p.square != 2 * p.t * p.t * p.d_prime - bm * bm * period)
        throw std::invalid_argument("polarization type: square identity violated");
}

PolarizationType normal_form(int n, const ZVec& h, bool allow_n1) {
    require_n(n);
    if (n == 1 && !allow_n1)
        throw std::invalid_argument("classification assumes n > 1; pass the n=1 override to proceed");
    require_kummer_vector(h);
    if (!is_primitive(h)) throw std::invalid_argument("vector must be primitive");
    GramLattice L = kummer_lattice(n);
    const Int square = L.q(h);
    if (square <= 0) throw std::invalid_argument("vector must have positive square");

    const Int period = two_n_plus_2(n);
    const Int t = L.divisibility(h);
    if (!divides(t, period)) throw std::logic_error("divisibility does not divide 2n+2");
    const Int m = exact_div(period, t);
    Int beta0 = mod_pos(h[6] * m, period);
    Int folded = period - beta0;
    Int beta = std::min(beta0, folded);
    if (beta > 0 && gcd(beta, period) != m) throw std::logic_error("beta does not match the divisibility");
    Int bm = beta == 0 ? Int(0) : exact_div(beta, m);
    Int num = square + bm * bm * period;
    if (!divides(2 * t * t, num)) throw std::logic_error("square congruence failed: not divisible by 2t^2");
    PolarizationType p;
    p.n = n;
    p.square = square;
    p.t = t;
    p.beta = beta;
    p.m = beta == 0 ? period : m;
    p.d_prime = exact_div(num, 2 * t * t);
    validate_polarization_type(p);
    return p;
}

ZVec realize(const PolarizationType& p) {
    validate_polarization_type(p);
    ZVec h(7, 0);
    h[0] = p.t;
    h[1] = p.t * p.d_prime;
    h[6] = p.beta == 0 ? Int(0) : exact_div(p.beta, p.m);
    return h;
}

bool equivalent(int n, const ZVec& h1, const ZVec& h2, bool allow_n1) {
    PolarizationType p1 = normal_form(n, h1, allow_n1);
    PolarizationType p2 = normal_form(n, h2, allow_n1);
    return p1 == p2;
}

std::vector<PolarizationType> orbit_enumerate(int n, const Int& square) {
    if (n < 2) throw std::invalid_argument("orbit enumeration assumes n > 1");
    if (square <= 0 || !divides(2, square))
        throw std::invalid_argument("square must be even and positive");
    const Int period = two_n_plus_2(n);
    std::vector<PolarizationType> out;
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
            Int num = square + bm * bm * period;
            if (!divides(2 * t * t, num)) continue;
            Int d_prime = exact_div(num, 2 * t * t);
            if (d_prime < 1) continue;
            PolarizationType p;
            p.n = n;
            p.square = square;
            p.t = t;
            p.beta = beta;
            p.m = beta == 0 ? period : m;
            p.d_prime = d_prime;
            validate_polarization_type(p);
            out.push_back(std::move(p));
        }
    }
    return out;
}

SaturatedPairInvariant saturation_invariant(int n, const ZVec& h) {
    require_n(n);
    require_kummer_vector(h);
    if (!is_primitive(h)) throw std::invalid_argument("vector must be primitive");

    GramLattice big = mukai_lattice();
    const ZVec v = mukai_coords(mukai_vn(n));
    const ZVec w = mukai_coords(embed_h2(n, h));
    const Int qv = big.q(v);

    std::vector<ZVec> basis = saturate(big, {v, w});
    auto vc = integer_coords_in(basis, v);
    auto wc = integer_coords_in(basis, w);
    if (!vc || !wc) throw std::logic_error("saturation does not contain its generators");
    const Int v1 = (*vc)[0], v2 = (*vc)[1];
    // complete primitive v to a basis (v, w0) of the saturation
    Int g, a, b;
    g = ext_gcd(v1, v2, a, b);
    if (g != 1) throw std::logic_error("v_n is not primitive in the saturation");
    const Int x = -b, y = a;  // v1*y - v2*x = 1
    ZVec w0(8, 0);
    for (int i = 0; i < 8; ++i) w0[i] = x * basis[0][i] + y * basis[1][i];

    // coordinates of w in (v, w0)
    const Int alpha0 = y * (*wc)[0] - x * (*wc)[1];
    const Int beta0 = v1 * (*wc)[1] - v2 * (*wc)[0];
    if (beta0 == 0) throw std::logic_error("embedded vector is proportional to v_n");

    const Int pair0 = big.inner(v, w0);
    const Int q0 = big.q(w0);
    auto q_at = [&](const Int& k) -> Int { return q0 + 2 * k * pair0 + k * k * qv; };
    Int kf = fdiv(-pair0, qv);
    std::vector<Int> ks;
    if (q_at(kf) <= q_at(kf + 1)) ks.push_back(kf);
    if (q_at(kf + 1) <= q_at(kf)) ks.push_back(kf + 1);

    const Int abs_beta = beta0 < 0 ? -beta0 : beta0;
    const int sign_beta0 = beta0 < 0 ? -1 : 1;
    bool have = false;
    std::array<Int, 4> best{};  // (q(b2), (v,b2), alpha, beta)
    for (const Int& k : ks) {
        for (int s : {1, -1}) {
            int sigma = s * sign_beta0;  // orients b2 so the h-coefficient is positive
            std::array<Int, 4> key{q_at(k), sigma * (pair0 + k * qv), s * (alpha0 - k * beta0), abs_beta};
            if (!have || key < best) {
                best = key;
                have = true;
            }
        }
    }

    SaturatedPairInvariant inv;
    inv.gram2.at(0, 0) = qv;
    inv.gram2.at(0, 1) = best[1];
    inv.gram2.at(1, 0) = best[1];
    inv.gram2.at(1, 1) = best[0];
    inv.v_coords = {1, 0};
    inv.h_coords = {best[2], best[3]};
    return inv;
}

Isometry monodromy_to_normal_form(int n, const ZVec& h, bool allow_n1) {
    GramLattice L = kummer_lattice(n);
    PolarizationType p = normal_form(n, h, allow_n1);
    ZVec target = realize(p);
    if (disc_class(L, h) == disc_class(L, target)) {
        Isometry iso = construct_isometry(L, h, target);
        if (!is_monodromy(iso)) throw std::logic_error("transvection chain is not a monodromy");
        return iso;
    }
    Isometry refl = reflection_en(n);
    ZVec folded = apply_isometry(refl, h);
    if (disc_class(L, folded) != disc_class(L, target))
        throw std::logic_error("neither h nor its reflection matches the class of the normal form");
    Isometry iso = compose(L, construct_isometry(L, folded, target), refl);
    if (apply_isometry(iso, h) != target) throw std::logic_error("monodromy misses the normal form");
    if (!is_monodromy(iso)) throw std::logic_error("folded chain is not a monodromy");
    return iso;
}

std::optional<Isometry> monodromy_between(int n, const ZVec& h1, const ZVec& h2, bool allow_n1) {
    if (!equivalent(n, h1, h2, allow_n1)) return std::nullopt;
    GramLattice L = kummer_lattice(n);
    Isometry g1 = monodromy_to_normal_form(n, h1, allow_n1);
    Isometry g2 = monodromy_to_normal_form(n, h2, allow_n1);
    Isometry iso = compose(L, inverse_isometry(L, g2), g1);
    if (apply_isometry(iso, h1) != h2) throw std::logic_error("composed monodromy misses the target");
    return iso;
}

}  // namespace korb
