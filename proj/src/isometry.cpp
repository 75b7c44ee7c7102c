#include "korb/isometry.hpp"

namespace korb {

bool preserves_gram(const GramLattice& L, const ZMat& m) {
    if (m.rows() != L.rank() || m.cols() != L.rank()) return false;
    return m.transpose() * L.gram() * m == L.gram();
}

int orientation_sign(const GramLattice& L, const ZMat& m) {
    const QMat& p = L.positive_plane();
    int np = p.cols();
    if (np == 0) return 1;
    int n = L.rank();
    // images of the plane basis under m
    QMat img(n, np);
    for (int j = 0; j < np; ++j)
        for (int i = 0; i < n; ++i) {
            Rat s = 0;
            for (int k = 0; k < n; ++k)
                if (m.at(i, k) != 0) s += Rat(m.at(i, k)) * p.at(k, j);
            img.at(i, j) = s;
        }
    // coordinates of the projection onto the plane: solve (P^T G P) X = P^T G img.
    // The plane basis is G-orthogonal with positive squares, so P^T G P is a
    // positive diagonal matrix and only the sign of det(P^T G img) matters.
    QMat g(L.gram().rows(), L.gram().cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = Rat(L.gram().at(i, j));
    QMat pt(np, n);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < n; ++j) pt.at(i, j) = p.at(j, i);
    Rat d = (pt * g * img).det();
    if (d == 0) throw std::logic_error("degenerate projection in orientation_sign");
    return d > 0 ? 1 : -1;
}

DiscAction disc_action(const GramLattice& L, const ZMat& m) {
    const DiscriminantGroup& g = L.disc_group();
    DiscAction a;
    a.generator_images.reserve(g.generators.size());
    bool plus = true, minus = true;
    for (size_t k = 0; k < g.generators.size(); ++k) {
        QVec img = mat_vec_q(m, g.generators[k]);
        DiscClass c = g.class_of_dual(L, img);
        for (size_t j = 0; j < c.components.size(); ++j) {
            Int want = (j == k) ? Int(1) : Int(0);
            if (c.components[j] != mod_pos(want, g.invariant_factors[j])) plus = false;
            if (c.components[j] != mod_pos(-want, g.invariant_factors[j])) minus = false;
        }
        a.generator_images.push_back(c.components);
    }
    if (plus)
        a.scalar = ScalarAction::plus_one;
    else if (minus)
        a.scalar = ScalarAction::minus_one;
    else
        a.scalar = ScalarAction::general;
    return a;
}

Isometry make_isometry(const GramLattice& L, ZMat m) {
    if (!preserves_gram(L, m)) throw std::invalid_argument("matrix does not preserve the form");
    Isometry g;
    Int d = m.det();
    if (d != 1 && d != -1) throw std::logic_error("isometry with determinant != +-1");
    g.det = int(d.get_si());
    g.disc_action = disc_action(L, m);
    g.orientation = orientation_sign(L, m);
    g.mat = std::move(m);
    return g;
}

Isometry compose(const GramLattice& L, const Isometry& a, const Isometry& b) {
    return make_isometry(L, a.mat * b.mat);
}

Isometry inverse_isometry(const GramLattice& L, const Isometry& g) {
    return make_isometry(L, g.mat.unimodular_inverse());
}

ZVec apply_isometry(const Isometry& g, const ZVec& v) { return g.mat * v; }

}  // namespace korb
