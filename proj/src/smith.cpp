#include "korb/smith.hpp"

namespace korb {

std::vector<Int> SmithDecomposition::diagonal() const {
    int k = std::min(diag.rows(), diag.cols());
    std::vector<Int> d(k);
    for (int i = 0; i < k; ++i) d[size_t(i)] = diag.at(i, i);
    return d;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> f;
    for (const Int& d : diagonal())
        if (d > 1) f.push_back(d);
    return f;
}

namespace {

// smallest nonzero entry by absolute value in the trailing block, lex
// tie-break on (i, j) so runs are reproducible
bool find_pivot(const ZMat& a, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const ZMat& m) {
    SmithDecomposition s{ZMat::identity(m.rows()), m, ZMat::identity(m.cols())};
    ZMat& a = s.diag;
    ZMat& u = s.left;   // tracks row ops
    ZMat& v = s.right;  // tracks col ops
    int steps = std::min(a.rows(), a.cols());

    for (int t = 0; t < steps; ++t) {
        int pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            // clear column t below the pivot
            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = div_nearest(a.at(i, t), a.at(t, t));
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a.at(i, t) != 0) {
                    // remainder strictly smaller: promote it to pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = div_nearest(a.at(t, j), a.at(t, t));
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // row and column are clear; enforce divisibility of the trailing block
            bool fixed = false;
            for (int i = t + 1; i < a.rows() && !fixed; ++i)
                for (int j = t + 1; j < a.cols() && !fixed; ++j)
                    if (!divides(a.at(t, t), a.at(i, j))) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return s;
}

ZMat hermite_row_basis(const ZMat& rows) {
    ZMat h = rows;
    int r = 0;
    for (int j = 0; j < h.cols() && r < h.rows(); ++j) {
        // Euclid on column j among rows r..end
        for (;;) {
            int p = -1;
            for (int i = r; i < h.rows(); ++i)
                if (h.at(i, j) != 0 && (p < 0 || abs(h.at(i, j)) < abs(h.at(p, j)))) p = i;
            if (p < 0) break;
            h.swap_rows(r, p);
            bool done = true;
            for (int i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, j) == 0) continue;
                Int q = fdiv(h.at(i, j), h.at(r, j));
                h.add_row(i, r, -q);
                if (h.at(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, j) == 0) continue;
        if (h.at(r, j) < 0) h.negate_row(r);
        for (int i = 0; i < r; ++i) {
            Int q = fdiv(h.at(i, j), h.at(r, j));
            h.add_row(i, r, -q);
        }
        ++r;
    }
    if (r != h.rows()) throw std::invalid_argument("hermite_row_basis: rows not independent");
    return h;
}

}  // namespace korb
