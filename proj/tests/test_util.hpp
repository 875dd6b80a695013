#pragma once
// Shared helpers for the test suites: a deterministic RNG, random matrix
// generators, and test-only oracles kept independent of the library paths
// they check.
#include <cstdint>
#include <vector>

#include "hopfcyc/sparse_matrix.hpp"

namespace testutil {

using hopfcyc::Rat;
using hopfcyc::SparseMatrix;
using hopfcyc::SparseVec;

// splitmix64: tiny, seedable, reproducible across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};

inline SparseMatrix random_int_matrix(Rng& rng, int rows, int cols, int lo = -5, int hi = 5,
                                      int percent_fill = 60) {
    SparseMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            if (rng.range(0, 99) < percent_fill) m.add(r, c, Rat((long)rng.range(lo, hi)));
    return m;
}

// Fraction-free (Bareiss) elimination rank oracle on a dense copy. This is
// deliberately a different algorithm from the library's sparse rref.
inline int bareiss_rank(const SparseMatrix& m) {
    int n = m.rows(), c = m.cols();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(c, 0));
    for (int j = 0; j < c; ++j)
        for (auto& [i, v] : m.col(j)) {
            // integer-scale the whole column by its lcm of denominators
            (void)i;
            (void)v;
        }
    // Scale each column to integers first (rank is unchanged).
    for (int j = 0; j < c; ++j) {
        mpz_class l = 1;
        for (auto& [i, v] : m.col(j)) l = lcm(l, v.get_den());
        for (auto& [i, v] : m.col(j)) a[i][j] = mpz_class(v.get_num() * (l / v.get_den()));
    }
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < n; ++r) {
            for (int j = col + 1; j < c; ++j)
                a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// Explicit quotient-basis oracle: dim(ker d_out / im d_in) by greedily
// extending an image basis to a kernel basis over a dense row-reduction.
inline int quotient_dim_oracle(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    // kernel of d_out by dense rational elimination (plain Gauss, no pivots
    // tricks), then count kernel vectors independent modulo the image.
    int n = d_out.cols();
    std::vector<std::vector<Rat>> rows(d_out.rows(), std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j)
        for (auto& [i, v] : d_out.col(j)) rows[i][j] = v;
    // forward elimination
    std::vector<int> pivcol;
    int rr = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rr; r < (int)rows.size(); ++r)
            if (!hopfcyc::is_zero(rows[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rr], rows[piv]);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rr || hopfcyc::is_zero(rows[r][col])) continue;
            Rat f = rows[r][col] / rows[rr][col];
            for (int j = col; j < n; ++j) rows[r][j] -= f * rows[rr][j];
        }
        pivcol.push_back(col);
        ++rr;
    }
    std::vector<char> is_piv(n, 0);
    for (int p : pivcol) is_piv[p] = 1;
    std::vector<std::vector<Rat>> kernel;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (int r = 0; r < rr; ++r)
            if (!hopfcyc::is_zero(rows[r][f])) v[pivcol[r]] = -rows[r][f] / rows[r][pivcol[r]];
        kernel.push_back(std::move(v));
    }
    // span accumulator: start with image columns, insert kernel vectors,
    // count how many actually enlarge the span.
    std::vector<std::vector<Rat>> span;  // row-echelon rows
    auto insert = [&](std::vector<Rat> v) -> bool {
        for (auto& row : span) {
            int lead = -1;
            for (int j = 0; j < n; ++j)
                if (!hopfcyc::is_zero(row[j])) {
                    lead = j;
                    break;
                }
            if (lead >= 0 && !hopfcyc::is_zero(v[lead])) {
                Rat f = v[lead] / row[lead];
                for (int j = 0; j < n; ++j) v[j] -= f * row[j];
            }
        }
        for (int j = 0; j < n; ++j)
            if (!hopfcyc::is_zero(v[j])) {
                span.push_back(v);
                return true;
            }
        return false;
    };
    for (int c = 0; c < d_in.cols(); ++c) {
        std::vector<Rat> v(n, Rat(0));
        for (auto& [i, x] : d_in.col(c)) v[i] = x;
        insert(std::move(v));
    }
    int fresh = 0;
    for (auto& kv : kernel)
        if (insert(kv)) ++fresh;
    return fresh;
}

}  // namespace testutil
