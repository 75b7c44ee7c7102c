#include "korb/eichler.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace korb {

namespace {

ZVec basis_vec(int n, int i) {
    ZVec e(n, 0);
    e[i] = 1;
    return e;
}

// Applies a chain of transvections to a vector while accumulating the
// product matrix.  Each step is a rank-2 update, O(rank^2).
struct Chain {
    const GramLattice& lat;
    ZVec x;
    ZMat acc;
    int count = 0;

    Chain(const GramLattice& l, ZVec v) : lat(l), x(std::move(v)), acc(ZMat::identity(l.rank())) {}

    void apply_isometry(const ZVec& e, const ZVec& a) {
        if (lat.q(e) != 0) throw std::logic_error("transvection pivot is not isotropic");
        if (lat.inner(e, a) != 0) throw std::logic_error("transvection vector not orthogonal to pivot");
        const Int half_qa = exact_div(lat.q(a), 2);
        const int n = lat.rank();

        Int ax = lat.inner(a, x);
        Int ex = lat.inner(e, x);
        Int ce = -ax - half_qa * ex;  // coefficient of e in the update
        for (int i = 0; i < n; ++i) x[i] += ce * e[i] + ex * a[i];

        // acc <- T * acc with T = I + e (Ga + qa/2 Ge)^T * (-1) ... spelled
        // out: row updates M += e (x) r + a (x) p, r = -(Ga)^T M - qa/2 p,
        // p = (Ge)^T M
        ZVec ge = lat.gram() * e;
        ZVec ga = lat.gram() * a;
        std::vector<Int> p(n, 0), r(n, 0);
        for (int j = 0; j < n; ++j) {
            Int pj = 0, qj = 0;
            for (int i = 0; i < n; ++i) {
                pj += ge[i] * acc.at(i, j);
                qj += ga[i] * acc.at(i, j);
            }
            p[j] = pj;
            r[j] = -qj - half_qa * pj;
        }
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0 && a[i] == 0) continue;
            for (int j = 0; j < n; ++j) acc.at(i, j) += e[i] * r[j] + a[i] * p[j];
        }
        ++count;
    }
};

// 2x2 integer elementary moves on the U^2 coefficients (a1,a2,b1,b2) of x,
// realized as transvections.  With M = [[a1,b1],[-b2,a2]]:
//   col0 += c col1  ~  t_{f2, c e1}
//   col1 += c col0  ~  t_{f1, c e2}
//   row0 += c row1  ~  t_{e2, -c e1}
//   row1 += c row0  ~  t_{f1, -c f2}
struct Block {
    Chain& ch;
    ZVec e1, f1, e2, f2;

    explicit Block(Chain& c)
        : ch(c),
          e1(basis_vec(c.lat.rank(), 0)),
          f1(basis_vec(c.lat.rank(), 1)),
          e2(basis_vec(c.lat.rank(), 2)),
          f2(basis_vec(c.lat.rank(), 3)) {}

    Int m00() const { return ch.x[0]; }
    Int m01() const { return ch.x[2]; }
    Int m10() const { return -ch.x[3]; }
    Int m11() const { return ch.x[1]; }

    void col0_plus(const Int& c) { ch.apply_isometry(f2, c * e1); }
    void col1_plus(const Int& c) { ch.apply_isometry(f1, c * e2); }
    void row0_plus(const Int& c) { ch.apply_isometry(e2, -c * e1); }
    void row1_plus(const Int& c) { ch.apply_isometry(f1, -c * f2); }

    // euclid on a pair sharing a row or column until the second entry dies
    void clear_m01() {
        while (m01() != 0) {
            if (m00() == 0) {
                col0_plus(1);
                continue;
            }
            col1_plus(-div_nearest(m01(), m00()));
            if (m01() == 0) break;
            col0_plus(-div_nearest(m00(), m01()));
        }
    }
    void clear_m10() {
        while (m10() != 0) {
            if (m00() == 0) {
                row0_plus(1);
                continue;
            }
            row1_plus(-div_nearest(m10(), m00()));
            if (m10() == 0) break;
            row0_plus(-div_nearest(m00(), m10()));
        }
    }

    // zero both off-diagonal entries; the row pass can dirty m01 and vice
    // versa, but min(|m00|,...) shrinks so this terminates
    void diagonalize() {
        while (m01() != 0 || m10() != 0) {
            clear_m01();
            clear_m10();
        }
    }

    // -identity on the U^2 block: (E21(-1) E12(1) E21(-1))^2
    void negate() {
        for (int rep = 0; rep < 2; ++rep) {
            row1_plus(-1);
            row0_plus(1);
            row1_plus(-1);
        }
    }
};

// xi = t * (class representative with the U^2 coordinates dropped); integral
// because the order of cls is exactly t
ZVec class_realization(const GramLattice& L, const Int& t, const DiscClass& cls) {
    const int n = L.rank();
    ZVec xi(n, 0);
    if (cls.is_trivial()) return xi;
    QVec rep = L.disc_group().representative(cls.components);
    for (int i = 4; i < n; ++i) {
        Rat scaled = rat_of(t) * rep[i];
        if (scaled.get_den() != 1) throw std::logic_error("class order does not match divisibility");
        xi[i] = scaled.get_num();
    }
    return xi;
}

}  // namespace

ZMat transvection_matrix(const GramLattice& L, const ZVec& e, const ZVec& a) {
    if (L.q(e) != 0) throw std::invalid_argument("transvection pivot must be isotropic");
    if (L.inner(e, a) != 0) throw std::invalid_argument("transvection vector must be orthogonal to the pivot");
    Chain ch(L, ZVec(L.rank(), 0));
    ch.apply_isometry(e, a);
    return ch.acc;
}

Isometry transvection(const GramLattice& L, const ZVec& e, const ZVec& a) {
    return make_isometry(L, transvection_matrix(L, e, a));
}

bool has_u2_prefix(const GramLattice& L) {
    const int n = L.rank();
    if (n < 4) return false;
    auto g = [&](int i, int j) { return L.gram().at(i, j); };
    for (int p = 0; p < 2; ++p) {
        int i = 2 * p;
        if (g(i, i) != 0 || g(i + 1, i + 1) != 0 || g(i, i + 1) != 1) return false;
    }
    if (g(0, 2) != 0 || g(0, 3) != 0 || g(1, 2) != 0 || g(1, 3) != 0) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = 4; j < n; ++j)
            if (g(i, j) != 0) return false;
    return true;
}

void require_u2_prefix(const GramLattice& L) {
    if (!has_u2_prefix(L))
        throw std::invalid_argument("lattice basis must start with two orthogonal hyperbolic planes");
}

bool eichler_equivalent(const GramLattice& L, const ZVec& v, const ZVec& w) {
    require_u2_prefix(L);
    if (!is_primitive(v) || !is_primitive(w))
        throw std::invalid_argument("eichler_equivalent requires primitive vectors");
    if (L.q(v) != L.q(w)) return false;
    return disc_class(L, v) == disc_class(L, w);
}

ZVec canonical_transvection_rep(const GramLattice& L, const Int& square, const DiscClass& cls) {
    require_u2_prefix(L);
    const Int t = cls.is_trivial() ? Int(1) : L.disc_group().order_of(cls);
    ZVec xi = class_realization(L, t, cls);
    Int num = square - L.q(xi);
    Int den = 2 * t * t;
    if (!divides(den, num))
        throw std::invalid_argument("no vector with this square in the given discriminant class");
    ZVec w = xi;
    w[0] = t;
    w[1] = t * exact_div(num, den);
    return w;
}

ReductionResult reduce_to_canonical(const GramLattice& L, const ZVec& v) {
    require_u2_prefix(L);
    if ((int)v.size() != L.rank()) throw std::invalid_argument("vector size does not match lattice rank");
    if (!is_primitive(v)) throw std::invalid_argument("reduce_to_canonical requires a primitive vector");

    const int n = L.rank();
    const Int square = L.q(v);
    const Int t = L.divisibility(v);
    const DiscClass cls = disc_class(L, v);
    const ZVec target = canonical_transvection_rep(L, square, cls);

    Chain ch(L, v);
    Block bl(ch);

    // phase 0: make some U^2 coefficient nonzero
    if (ch.x[0] == 0 && ch.x[1] == 0 && ch.x[2] == 0 && ch.x[3] == 0) {
        for (int j = 4; j < n; ++j) {
            if (L.inner(basis_vec(n, j), ch.x) != 0) {
                ch.apply_isometry(bl.e1, basis_vec(n, j));
                break;
            }
        }
        if (ch.x[0] == 0 && ch.x[1] == 0) throw std::logic_error("nonzero vector pairs with nothing");
    }

    // phase 1: kill the second-plane coefficients
    bl.diagonalize();
    if (bl.m00() == 0) {
        // only m11 survived; rotate it into place
        bl.col0_plus(1);
        bl.row0_plus(1);
        bl.diagonalize();
    }
    if (bl.m00() < 0) bl.negate();

    // phase 2: drive gcd(a1, a2) down to t by mixing in the complement part
    if (gcd(bl.m00(), bl.m11()) != t) {
        Int du = 0;
        ZVec a0(n, 0);
        for (int j = 4; j < n; ++j) {
            Int pj = L.inner(basis_vec(n, j), ch.x);
            if (pj == 0) continue;
            Int g, ca, cb;
            g = ext_gcd(du, pj, ca, cb);
            for (int i = 0; i < n; ++i) a0[i] *= ca;
            a0[j] += cb;
            du = g;
        }
        if (du == 0) throw std::logic_error("divisibility mismatch during reduction");
        const Int a1 = bl.m00();
        Int m = 0;
        bool found = false;
        for (Int tries = 0; tries <= abs(a1) + 1; ++tries, ++m) {
            if (gcd(a1, bl.m11() - m * du) == t) {
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("gcd injection failed");
        if (m != 0) {
            ZVec ma0 = a0;
            for (auto& c : ma0) c *= m;
            ch.apply_isometry(bl.f1, ma0);
        }
    }

    // phase 3: euclid (a1, a2) down to a1 = t
    if (gcd(bl.m00(), bl.m11()) != abs(bl.m00())) {
        bl.col0_plus(1);
        bl.diagonalize();
    }
    if (bl.m00() < 0) bl.negate();
    if (bl.m00() != t) throw std::logic_error("reduction did not reach the divisibility");

    // phase 4: move the complement part onto the canonical class realization
    ZVec shift(n, 0);
    bool nonzero = false;
    for (int i = 4; i < n; ++i) {
        Int diff = target[i] - ch.x[i];
        if (!divides(t, diff)) throw std::logic_error("complement part not aligned with class");
        shift[i] = exact_div(diff, t);
        if (shift[i] != 0) nonzero = true;
    }
    if (nonzero) ch.apply_isometry(bl.f1, shift);

    // the f1 coefficient is now forced by the square
    if (ch.x != target) throw std::logic_error("reduction missed the canonical representative");
    return ReductionResult{std::move(ch.acc), std::move(ch.x), ch.count};
}

Isometry construct_isometry(const GramLattice& L, const ZVec& v, const ZVec& w) {
    if (!eichler_equivalent(L, v, w))
        throw std::invalid_argument("vectors are not equivalent under the transvection group");
    ReductionResult rv = reduce_to_canonical(L, v);
    ReductionResult rw = reduce_to_canonical(L, w);
    ZMat g = rw.g.unimodular_inverse() * rv.g;
    Isometry iso = make_isometry(L, g);
    if (apply_isometry(iso, v) != w) throw std::logic_error("constructed isometry misses the target");
    if (iso.det != 1) throw std::logic_error("constructed isometry has determinant -1");
    if (!iso.disc_action.is_trivial()) throw std::logic_error("constructed isometry moves the discriminant group");
    if (iso.orientation != 1) throw std::logic_error("constructed isometry reverses orientation");
    return iso;
}

}  // namespace korb
