#include "hopfcyc/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

Rat sv_get(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Rat(0);
}

void sv_set(SparseVec& v, int i, const Rat& x) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == i) {
        if (is_zero(x))
            v.erase(it);
        else
            it->second = x;
    } else if (!is_zero(x)) {
        v.insert(it, {i, x});
    }
}

void sv_axpy(SparseVec& a, const Rat& c, const SparseVec& b) {
    if (is_zero(c) || b.empty()) return;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rat s = a[i].second + c * b[j].second;
            if (!is_zero(s)) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.emplace_back(b[j].first, c * b[j].second);
    a.swap(out);
}

void sv_scale(SparseVec& a, const Rat& c) {
    if (is_zero(c)) {
        a.clear();
        return;
    }
    for (auto& p : a) p.second *= c;
}

SparseVec sv_sub(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    sv_axpy(r, Rat(-1), b);
    return r;
}

Rat sv_dot(const SparseVec& a, const SparseVec& b) {
    Rat s(0);
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            ++i;
        else if (a[i].first > b[j].first)
            ++j;
        else
            s += a[i++].second * b[j++].second;
    }
    return s;
}

SparseVec sv_unit(int i) { return SparseVec{{i, Rat(1)}}; }

void SparseMatrix::add(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("SparseMatrix::add index out of range");
    if (hopfcyc::is_zero(v)) return;
    Rat cur = sv_get(col_[c], r);
    sv_set(col_[c], r, cur + v);
}

void SparseMatrix::set_col(int c, SparseVec v) {
    assert(c >= 0 && c < cols_);
    for (auto& p : v) assert(p.first >= 0 && p.first < rows_);
    col_[c] = std::move(v);
}

long long SparseMatrix::nnz() const {
    long long n = 0;
    for (auto& c : col_) n += (long long)c.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec y;
    for (auto& [j, v] : x) {
        assert(j >= 0 && j < cols_);
        sv_axpy(y, v, col_[j]);
    }
    return y;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    assert(cols_ == o.rows_);
    SparseMatrix r(rows_, o.cols_);
    for (int c = 0; c < o.cols_; ++c) r.col_[c] = apply(o.col_[c]);
    return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SparseMatrix r = *this;
    for (int c = 0; c < cols_; ++c) sv_axpy(r.col_[c], Rat(1), o.col_[c]);
    return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    SparseMatrix r = *this;
    for (int c = 0; c < cols_; ++c) sv_axpy(r.col_[c], Rat(-1), o.col_[c]);
    return r;
}

SparseMatrix SparseMatrix::scaled(const Rat& c) const {
    SparseMatrix r = *this;
    for (auto& col : r.col_) sv_scale(col, c);
    return r;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (auto& [r, v] : col_[c]) t.col_[r].emplace_back(c, v);
    // columns of t were filled in increasing r per c, i.e. already sorted
    return t;
}

std::vector<SparseVec> SparseMatrix::to_rows() const { return transpose().col_; }

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.col_[i] = sv_unit(i);
    return m;
}

SparseMatrix SparseMatrix::from_cols(int rows, const std::vector<SparseVec>& cols) {
    SparseMatrix m(rows, (int)cols.size());
    for (size_t c = 0; c < cols.size(); ++c) m.set_col((int)c, cols[c]);
    return m;
}

SparseMatrix SparseMatrix::pow(int e) const {
    assert(rows_ == cols_ && e >= 0);
    SparseMatrix r = identity(rows_);
    for (int i = 0; i < e; ++i) r = *this * r;
    return r;
}

}  // namespace hopfcyc
