#include "korb/lattice.hpp"

#include <mutex>

namespace korb {

struct GramLattice::Impl {
    ZMat gram;
    int rank = 0;

    mutable std::once_flag sig_once;
    mutable std::pair<int, int> signature;
    mutable QMat positive_plane;

    mutable std::once_flag disc_once;
    mutable DiscriminantGroup disc;
};

GramLattice::GramLattice(ZMat gram) : impl_(std::make_shared<Impl>()) {
    if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
    int n = gram.rows();
    for (int i = 0; i < n; ++i) {
        if (!divides(2, gram.at(i, i)))
            throw std::invalid_argument("lattice is not even: odd diagonal entry");
        for (int j = i + 1; j < n; ++j)
            if (gram.at(i, j) != gram.at(j, i))
                throw std::invalid_argument("Gram matrix must be symmetric");
    }
    if (n > 0 && gram.det() == 0) throw std::invalid_argument("Gram matrix must be nondegenerate");
    impl_->rank = n;
    impl_->gram = std::move(gram);
}

int GramLattice::rank() const { return impl_->rank; }
const ZMat& GramLattice::gram() const { return impl_->gram; }

bool GramLattice::operator==(const GramLattice& o) const { return impl_->gram == o.impl_->gram; }

Int GramLattice::inner(const ZVec& v, const ZVec& w) const {
    int n = rank();
    if (int(v.size()) != n || int(w.size()) != n)
        throw std::invalid_argument("vector length does not match lattice rank");
    Int s = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j)
            if (impl_->gram.at(i, j) != 0) row += impl_->gram.at(i, j) * w[j];
        s += v[i] * row;
    }
    return s;
}

Rat GramLattice::inner_q(const QVec& v, const QVec& w) const {
    int n = rank();
    if (int(v.size()) != n || int(w.size()) != n)
        throw std::invalid_argument("vector length does not match lattice rank");
    Rat s = 0;
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n; ++j)
            if (impl_->gram.at(i, j) != 0) row += Rat(impl_->gram.at(i, j)) * w[j];
        s += v[i] * row;
    }
    return s;
}

Int GramLattice::divisibility(const ZVec& v) const {
    if (is_zero(v)) throw std::invalid_argument("divisibility of the zero vector");
    Int g = 0;
    for (int i = 0; i < rank(); ++i) {
        ZVec e(rank(), Int(0));
        e[size_t(i)] = 1;
        g = gcd(g, inner(v, e));
    }
    return g;
}

namespace {

// simultaneous congruent diagonalization: returns C with C^T G C diagonal,
// and the diagonal values; deterministic pivot order
void diagonalize_form(const ZMat& gram, QMat& c_out, QVec& diag_out) {
    int n = gram.rows();
    QMat a(gram);
    QMat c = QMat::identity(n);
    for (int t = 0; t < n; ++t) {
        if (a.at(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a.at(i, i) != 0) {
                    p = i;
                    break;
                }
            if (p >= 0) {
                // symmetric swap of basis vectors t and p
                for (int k = 0; k < n; ++k) std::swap(a.at(t, k), a.at(p, k));
                for (int k = 0; k < n; ++k) std::swap(a.at(k, t), a.at(k, p));
                for (int k = 0; k < n; ++k) std::swap(c.at(k, t), c.at(k, p));
            } else {
                int pi = -1, pj = -1;
                for (int i = t; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (a.at(i, j) != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) break;  // trailing block is zero
                if (pi != t) {
                    for (int k = 0; k < n; ++k) std::swap(a.at(t, k), a.at(pi, k));
                    for (int k = 0; k < n; ++k) std::swap(a.at(k, t), a.at(k, pi));
                    for (int k = 0; k < n; ++k) std::swap(c.at(k, t), c.at(k, pi));
                }
                // basis_t += basis_pj makes the diagonal entry 2*a(t,pj) != 0
                for (int k = 0; k < n; ++k) a.at(t, k) += a.at(pj, k);
                for (int k = 0; k < n; ++k) a.at(k, t) += a.at(k, pj);
                for (int k = 0; k < n; ++k) c.at(k, t) += c.at(k, pj);
            }
        }
        Rat piv = a.at(t, t);
        if (piv == 0) continue;
        for (int i = t + 1; i < n; ++i) {
            if (a.at(i, t) == 0) continue;
            Rat f = a.at(i, t) / piv;
            for (int k = 0; k < n; ++k) a.at(i, k) -= f * a.at(t, k);
            for (int k = 0; k < n; ++k) a.at(k, i) -= f * a.at(k, t);
            for (int k = 0; k < n; ++k) c.at(k, i) -= f * c.at(k, t);
        }
    }
    diag_out.assign(size_t(n), Rat(0));
    for (int i = 0; i < n; ++i) diag_out[size_t(i)] = a.at(i, i);
    c_out = c;
}

}  // namespace

std::pair<int, int> GramLattice::signature() const {
    std::call_once(impl_->sig_once, [this] {
        QMat c;
        QVec d;
        diagonalize_form(impl_->gram, c, d);
        int pos = 0, neg = 0;
        for (const Rat& x : d) {
            if (x > 0) ++pos;
            if (x < 0) ++neg;
        }
        impl_->signature = {pos, neg};
        QMat plane(rank(), pos);
        int col = 0;
        for (int j = 0; j < rank(); ++j)
            if (d[size_t(j)] > 0) {
                for (int i = 0; i < rank(); ++i) plane.at(i, col) = c.at(i, j);
                ++col;
            }
        impl_->positive_plane = plane;
    });
    return impl_->signature;
}

const QMat& GramLattice::positive_plane() const {
    signature();
    return impl_->positive_plane;
}

const DiscriminantGroup& GramLattice::disc_group() const {
    std::call_once(impl_->disc_once, [this] {
        SmithDecomposition s = smith_normal_form(impl_->gram);
        DiscriminantGroup g;
        g.snf_left = s.left;
        g.snf_diag = s.diagonal();
        g.order = 1;
        for (int i = 0; i < rank(); ++i) {
            const Int& d = g.snf_diag[size_t(i)];
            g.order *= d;
            if (d > 1) {
                g.slots.push_back(i);
                g.invariant_factors.push_back(d);
                QVec gen((size_t)rank());
                for (int r = 0; r < rank(); ++r) gen[size_t(r)] = rat_of(s.right.at(r, i), d);
                g.generators.push_back(std::move(gen));
            }
        }
        impl_->disc = std::move(g);
    });
    return impl_->disc;
}

DiscClass DiscriminantGroup::class_of_dual(const GramLattice& L, const QVec& x) const {
    int n = L.rank();
    // z = G x must be integral for x in the dual lattice
    ZVec z((size_t)n);
    for (int i = 0; i < n; ++i) {
        Rat zi = 0;
        for (int j = 0; j < n; ++j)
            if (L.gram().at(i, j) != 0) zi += Rat(L.gram().at(i, j)) * x[size_t(j)];
        if (zi.get_den() != 1) throw std::invalid_argument("vector is not in the dual lattice");
        z[size_t(i)] = zi.get_num();
    }
    ZVec y = snf_left * z;
    DiscClass c;
    c.components.reserve(slots.size());
    for (size_t k = 0; k < slots.size(); ++k)
        c.components.push_back(mod_pos(y[size_t(slots[k])], invariant_factors[k]));
    c.q_value = normalize_mod2(L.q_q(x));
    return c;
}

QVec DiscriminantGroup::representative(const std::vector<Int>& comp) const {
    if (comp.size() != generators.size())
        throw std::invalid_argument("component count does not match generator count");
    size_t n = generators.empty() ? 0 : generators[0].size();
    QVec rep(n, Rat(0));
    for (size_t k = 0; k < comp.size(); ++k) {
        Int c = mod_pos(comp[k], invariant_factors[k]);
        if (c == 0) continue;
        for (size_t i = 0; i < n; ++i) rep[i] += Rat(c) * generators[k][i];
    }
    return rep;
}

DiscClass DiscriminantGroup::class_from_components(const GramLattice& L,
                                                   std::vector<Int> comp) const {
    for (size_t k = 0; k < comp.size(); ++k) comp[k] = mod_pos(comp[k], invariant_factors[k]);
    DiscClass c;
    c.components = comp;
    if (invariant_factors.empty()) {
        c.q_value = Rat(0);
        return c;
    }
    c.q_value = normalize_mod2(L.q_q(representative(comp)));
    return c;
}

Int DiscriminantGroup::order_of(const DiscClass& c) const {
    Int o = 1;
    for (size_t k = 0; k < c.components.size(); ++k) {
        const Int& d = invariant_factors[k];
        o = lcm(o, exact_div(d, gcd(d, c.components[k])));
    }
    return o;
}

DiscClass DiscriminantGroup::negate(const GramLattice& L, const DiscClass& c) const {
    std::vector<Int> comp(c.components.size());
    for (size_t k = 0; k < comp.size(); ++k) comp[k] = -c.components[k];
    return class_from_components(L, comp);
}

DiscClass DiscriminantGroup::scale(const GramLattice& L, const DiscClass& c, const Int& k) const {
    std::vector<Int> comp(c.components.size());
    for (size_t i = 0; i < comp.size(); ++i) comp[i] = k * c.components[i];
    return class_from_components(L, comp);
}

GramLattice hyperbolic_u() { return GramLattice(ZMat{{0, 1}, {1, 0}}); }

GramLattice rank_one(const Int& diag) {
    ZMat g(1, 1);
    g.at(0, 0) = diag;
    return GramLattice(std::move(g));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
    int n = a.rank(), m = b.rank();
    ZMat g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = a.gram().at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.at(n + i, n + j) = b.gram().at(i, j);
    return GramLattice(std::move(g));
}

bool is_primitive(const ZVec& v) { return content(v) == 1; }

DiscClass disc_class(const GramLattice& L, const ZVec& v) {
    if (!is_primitive(v)) throw std::invalid_argument("disc_class requires a primitive vector");
    Int t = L.divisibility(v);
    QVec x(v.size());
    for (size_t i = 0; i < v.size(); ++i) x[i] = rat_of(v[i], t);
    return L.disc_group().class_of_dual(L, x);
}

std::vector<ZVec> saturate(const GramLattice& L, const std::vector<ZVec>& span_vectors) {
    if (span_vectors.empty()) return {};
    int k = int(span_vectors.size());
    int n = L.rank();
    ZMat s(k, n);
    for (int i = 0; i < k; ++i) {
        if (int(span_vectors[size_t(i)].size()) != n)
            throw std::invalid_argument("span vector length does not match lattice rank");
        for (int j = 0; j < n; ++j) s.at(i, j) = span_vectors[size_t(i)][size_t(j)];
    }
    SmithDecomposition d = smith_normal_form(s);
    for (int i = 0; i < k; ++i)
        if (d.diag.at(i, i) == 0)
            throw std::invalid_argument("saturate requires linearly independent vectors");
    // rows of s = L^-1 D R^-1, so the rational row span equals the span of the
    // first k rows of R^-1, which generate a saturated sublattice of Z^n
    ZMat rinv = d.right.unimodular_inverse();
    ZMat basis(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) basis.at(i, j) = rinv.at(i, j);
    ZMat h = hermite_row_basis(basis);
    std::vector<ZVec> out;
    out.reserve(size_t(k));
    for (int i = 0; i < k; ++i) out.push_back(h.row(i));
    return out;
}

std::optional<ZVec> integer_coords_in(const std::vector<ZVec>& rows, const ZVec& v) {
    if (rows.empty()) return std::nullopt;
    int k = int(rows.size());
    int n = int(rows[0].size());
    // solve x * rows = v via the Euclidean normal equations (rows independent)
    QMat gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Rat s = 0;
            for (int c = 0; c < n; ++c) s += Rat(rows[size_t(i)][size_t(c)] * rows[size_t(j)][size_t(c)]);
            gram.at(i, j) = s;
        }
    QVec rhs((size_t)k);
    for (int i = 0; i < k; ++i) {
        Rat s = 0;
        for (int c = 0; c < n; ++c) s += Rat(rows[size_t(i)][size_t(c)] * v[size_t(c)]);
        rhs[size_t(i)] = s;
    }
    QVec x = gram.inverse() * rhs;
    ZVec xi((size_t)k);
    for (int i = 0; i < k; ++i) {
        if (x[size_t(i)].get_den() != 1) return std::nullopt;
        xi[size_t(i)] = x[size_t(i)].get_num();
    }
    // confirm exactly
    for (int c = 0; c < n; ++c) {
        Int s = 0;
        for (int i = 0; i < k; ++i) s += xi[size_t(i)] * rows[size_t(i)][size_t(c)];
        if (s != v[size_t(c)]) return std::nullopt;
    }
    return xi;
}

}  // namespace korb
