#pragma once
#include <utility>
#include <vector>

#include "hopfcyc/rational.hpp"

namespace hopfcyc {

// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

Rat sv_get(const SparseVec& v, int i);
void sv_set(SparseVec& v, int i, const Rat& x);
// a += c*b, keeping the representation canonical.
void sv_axpy(SparseVec& a, const Rat& c, const SparseVec& b);
void sv_scale(SparseVec& a, const Rat& c);
SparseVec sv_sub(const SparseVec& a, const SparseVec& b);
Rat sv_dot(const SparseVec& a, const SparseVec& b);
inline bool sv_is_zero(const SparseVec& v) { return v.empty(); }
SparseVec sv_unit(int i);

// Column-major sparse matrix over exact rationals. No stored zeros; all
// indices in range (checked on insertion).
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rat& v);
    void set_col(int c, SparseVec v);
    const SparseVec& col(int c) const { return col_[c]; }
    Rat at(int r, int c) const { return sv_get(col_[c], r); }

    long long nnz() const;
    bool is_zero() const;

    SparseVec apply(const SparseVec& x) const;  // M * x
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rat& c) const;
    bool operator==(const SparseMatrix& o) const;

    SparseMatrix transpose() const;
    std::vector<SparseVec> to_rows() const;
    static SparseMatrix identity(int n);
    static SparseMatrix from_cols(int rows, const std::vector<SparseVec>& cols);

    SparseMatrix pow(int e) const;  // square matrices only

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> col_;
};

}  // namespace hopfcyc
