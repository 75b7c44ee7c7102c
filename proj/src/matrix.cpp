#include "korb/matrix.hpp"

namespace korb {

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.assign(size_t(rows_) * cols_, Int(0));
    int i = 0;
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (long x : r) at(i, j++) = x;
        ++i;
    }
}

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    ZMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ZVec ZMat::operator*(const ZVec& v) const {
    if (int(v.size()) != cols_) throw std::logic_error("matrix-vector shape mismatch");
    ZVec r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

ZMat ZMat::operator-() const {
    ZMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

ZMat ZMat::transpose() const {
    ZMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int ZMat::det() const {
    if (rows_ != cols_) throw std::logic_error("det of non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    ZMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(num, prev);
            }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

ZMat ZMat::unimodular_inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    Int d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    int n = rows_;
    // adjugate via cofactors; n <= 8 in practice
    ZMat adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ZMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof;
        }
    if (d == -1) return -adj;
    return adj;
}

void ZMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void ZMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void ZMat::add_row(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void ZMat::add_col(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void ZMat::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void ZMat::negate_col(int j) {
    for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

ZVec ZMat::row(int i) const {
    ZVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

ZVec ZMat::col(int j) const {
    ZVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

QMat::QMat(const ZMat& m) : rows_(m.rows()), cols_(m.cols()), a_(size_t(rows_) * cols_) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

QVec QMat::operator*(const QVec& v) const {
    if (int(v.size()) != cols_) throw std::logic_error("matrix-vector shape mismatch");
    QVec r(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    int n = rows_;
    QMat m = *this;
    QMat inv = identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("singular matrix");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(p, j), m.at(k, j));
                std::swap(inv.at(p, j), inv.at(k, j));
            }
        Rat piv = m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

Rat QMat::det() const {
    if (rows_ != cols_) throw std::logic_error("det of non-square matrix");
    int n = rows_;
    QMat m = *this;
    Rat d(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        Rat piv = m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) / piv;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

ZVec mat_vec(const ZMat& m, const ZVec& v) { return m * v; }

QVec mat_vec_q(const ZMat& m, const QVec& v) {
    if (int(v.size()) != m.cols()) throw std::logic_error("matrix-vector shape mismatch");
    QVec r(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r[i] += Rat(m.at(i, j)) * v[j];
    return r;
}

}  // namespace korb
