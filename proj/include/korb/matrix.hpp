#pragma once

#include <initializer_list>

#include "korb/numeric.hpp"

namespace korb {

// Dense exact integer matrix.  Ranks in this library are tiny (<= 8 for the
// lattices, a bit more in randomized tests), so no attempt at sparsity.
class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}
    ZMat(std::initializer_list<std::initializer_list<long>> rows);

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const ZMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const ZMat& o) const { return !(*this == o); }

    ZMat operator*(const ZMat& o) const;
    ZVec operator*(const ZVec& v) const;
    ZMat operator-() const;
    ZMat transpose() const;

    // Fraction-free Bareiss determinant; square matrices only.
    Int det() const;

    // Inverse of a matrix with det = +-1 (integer inverse via adjugate).
    ZMat unimodular_inverse() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += c * row j
    void add_row(int i, int j, const Int& c);
    // col i += c * col j
    void add_col(int i, int j, const Int& c);
    void negate_row(int i);
    void negate_col(int i);

    ZVec row(int i) const;
    ZVec col(int j) const;

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Dense exact rational matrix; used for dual bases and orthogonal projections.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    explicit QMat(const ZMat& m);

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    QMat operator*(const QMat& o) const;
    QVec operator*(const QVec& v) const;

    // Gauss-Jordan inverse; throws std::invalid_argument when singular.
    QMat inverse() const;
    Rat det() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

ZVec mat_vec(const ZMat& m, const ZVec& v);
QVec mat_vec_q(const ZMat& m, const QVec& v);

}  // namespace korb
