#include "hopfcyc/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

namespace {

// Dense fallback threshold (HOPFCYC_DENSE_THRESHOLD, default 0 = pure
// sparse elimination). Matrices whose column count is at or below the
// threshold take a plain dense Gaussian path instead.
int dense_threshold() {
    const char* e = std::getenv("HOPFCYC_DENSE_THRESHOLD");
    return e ? std::atoi(e) : 0;
}

int dense_rank(const SparseMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
    for (int c = 0; c < m.cols(); ++c)
        for (auto& [r, v] : m.col(c)) a[r][c] = v;
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int piv = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (!is_zero(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rk], a[piv]);
        for (int r = rk + 1; r < m.rows(); ++r) {
            if (is_zero(a[r][c])) continue;
            Rat f = a[r][c] / a[rk][c];
            for (int j = c; j < m.cols(); ++j) a[r][j] -= f * a[rk][j];
        }
        ++rk;
    }
    return rk;
}

}  // namespace

RrefResult rref_rows(std::vector<SparseVec> rows, int cols) {
    // id keeps the original row index for deterministic tie-breaking.
    struct WorkRow {
        int id;
        SparseVec v;
    };
    std::vector<WorkRow> work;
    work.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) work.push_back({(int)i, std::move(rows[i])});

    RrefResult res;
    res.cols = cols;
    std::vector<WorkRow> done;  // pivot rows in pivot-column order

    // Rows in `work` have zero entries at all previously chosen pivot
    // columns, so a nonzero at column c means leading entry c.
    for (int c = 0; c < cols && !work.empty(); ++c) {
        int best = -1;
        for (size_t i = 0; i < work.size(); ++i) {
            if (work[i].v.empty() || work[i].v.front().first != c) continue;
            if (best < 0 || work[i].v.size() < work[best].v.size() ||
                (work[i].v.size() == work[best].v.size() && work[i].id < work[best].id))
                best = (int)i;
        }
        if (best < 0) continue;
        WorkRow piv = std::move(work[best]);
        work.erase(work.begin() + best);
        Rat lead = piv.v.front().second;
        sv_scale(piv.v, Rat(1) / lead);
        for (auto& w : work) {
            Rat x = sv_get(w.v, c);
            if (!is_zero(x)) sv_axpy(w.v, -x, piv.v);
        }
        for (auto& d : done) {
            Rat x = sv_get(d.v, c);
            if (!is_zero(x)) sv_axpy(d.v, -x, piv.v);
        }
        res.pivot_cols.push_back(c);
        done.push_back(std::move(piv));
        // drop rows that became zero
        work.erase(std::remove_if(work.begin(), work.end(),
                                  [](const WorkRow& w) { return w.v.empty(); }),
                   work.end());
    }
    res.rank = (int)res.pivot_cols.size();
    res.rows.reserve(done.size());
    for (auto& d : done) res.rows.push_back(std::move(d.v));
    return res;
}

RrefResult rref(const SparseMatrix& m) { return rref_rows(m.to_rows(), m.cols()); }

int rank(const SparseMatrix& m) {
    if (dense_threshold() > 0 && m.cols() <= dense_threshold() && m.rows() <= dense_threshold())
        return dense_rank(m);
    // forward-only elimination: rows bucketed by leading column, best pivot
    // by fill-in then original index; no back-substitution is needed for
    // the rank, which keeps fill far below full rref
    std::vector<SparseVec> rows = m.to_rows();
    int cols = m.cols();
    std::vector<std::vector<std::pair<int, SparseVec>>> bucket(cols + 1);
    int id = 0;
    for (auto& r : rows)
        if (!r.empty()) {
            int lead = r.front().first;
            bucket[lead].emplace_back(id++, std::move(r));
        }
    int rk = 0;
    for (int c0 = 0; c0 < cols; ++c0) {
        auto& cand = bucket[c0];
        if (cand.empty()) continue;
        int best = 0;
        for (int i = 1; i < (int)cand.size(); ++i)
            if (cand[i].second.size() < cand[best].second.size() ||
                (cand[i].second.size() == cand[best].second.size() &&
                 cand[i].first < cand[best].first))
                best = i;
        std::swap(cand[best], cand.back());
        auto piv = std::move(cand.back());
        cand.pop_back();
        ++rk;
        Rat lead = piv.second.front().second;
        for (auto& [rid, row] : cand) {
            Rat x = row.front().second;
            sv_axpy(row, -x / lead, piv.second);
            if (!row.empty()) bucket[row.front().first].emplace_back(rid, std::move(row));
        }
        cand.clear();
    }
    return rk;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    std::vector<int> pivot_row_of(m.cols(), -1);
    for (int i = 0; i < r.rank; ++i) {
        is_pivot[r.pivot_cols[i]] = 1;
        pivot_row_of[r.pivot_cols[i]] = i;
    }
    std::vector<SparseVec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        for (int i = 0; i < r.rank; ++i) {
            Rat x = sv_get(r.rows[i], f);
            if (!is_zero(x)) sv_set(v, r.pivot_cols[i], -x);
        }
        sv_set(v, f, Rat(1));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SparseVec> image_basis(const SparseMatrix& m) {
    RrefResult r = rref_rows(m.transpose().to_rows(), m.rows());
    return r.rows;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    // rref of [M | b]; a pivot in the last column means inconsistent.
    std::vector<SparseVec> rows = m.to_rows();
    int bc = m.cols();
    for (auto& [i, v] : b) {
        if (i < 0 || i >= m.rows()) throw Error("solve: rhs index out of range");
        rows[i].emplace_back(bc, v);
    }
    RrefResult r = rref_rows(std::move(rows), bc + 1);
    SparseVec x;
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] == bc) return std::nullopt;
        Rat rhs = sv_get(r.rows[i], bc);
        if (!is_zero(rhs)) sv_set(x, r.pivot_cols[i], rhs);
    }
    return x;
}

SparseVec reduce_by(const std::vector<SparseVec>& reduced_rows, SparseVec v) {
    for (const auto& row : reduced_rows) {
        if (row.empty()) continue;
        Rat x = sv_get(v, row.front().first);
        if (!is_zero(x)) sv_axpy(v, -x, row);
    }
    return v;
}

bool in_span(const RrefResult& span, const SparseVec& v) {
    return reduce_by(span.rows, v).empty();
}

SparseVec QuotientPresentation::project(const SparseVec& v) const {
    SparseVec red = reduce_by(reduced_relations, v);
    SparseVec out;
    // After reduction the support lies in the representative columns.
    std::map<int, int> rep_index;
    for (size_t i = 0; i < representative_cols.size(); ++i)
        rep_index[representative_cols[i]] = (int)i;
    for (auto& [i, x] : red) {
        auto it = rep_index.find(i);
        if (it == rep_index.end()) throw Error("quotient projection: reduction left a pivot coordinate");
        sv_set(out, it->second, x);
    }
    return out;
}

SparseVec QuotientPresentation::section(const SparseVec& q) const {
    SparseVec v;
    for (auto& [j, x] : q) {
        assert(j >= 0 && j < dim());
        sv_set(v, representative_cols[j], x);
    }
    return v;
}

SparseMatrix QuotientPresentation::projection_matrix() const {
    SparseMatrix p(dim(), ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) p.set_col(c, project(sv_unit(c)));
    return p;
}

SparseMatrix QuotientPresentation::section_matrix() const {
    SparseMatrix s(ambient_dim, dim());
    for (int j = 0; j < dim(); ++j) s.set_col(j, sv_unit(representative_cols[j]));
    return s;
}

QuotientPresentation quotient(int ambient_dim, const std::vector<SparseVec>& relations) {
    for (auto& r : relations)
        if (!r.empty() && r.back().first >= ambient_dim)
            throw Error("quotient: relation exceeds ambient dimension");
    RrefResult rr = rref_rows(relations, ambient_dim);
    QuotientPresentation q;
    q.ambient_dim = ambient_dim;
    q.reduced_relations = rr.rows;
    q.pivot_cols = rr.pivot_cols;
    std::vector<char> is_pivot(ambient_dim, 0);
    for (int p : q.pivot_cols) is_pivot[p] = 1;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.representative_cols.push_back(c);
    return q;
}

SparseMatrix induced_on_quotient(const SparseMatrix& f, const QuotientPresentation& in,
                                 const QuotientPresentation& out, bool check_descends) {
    assert(f.cols() == in.ambient_dim && f.rows() == out.ambient_dim);
    if (check_descends) {
        for (const auto& rel : in.reduced_relations) {
            SparseVec img = reduce_by(out.reduced_relations, f.apply(rel));
            if (!img.empty())
                throw Error("induced_on_quotient: map does not descend to the quotient");
        }
    }
    SparseMatrix m(out.dim(), in.dim());
    for (int j = 0; j < in.dim(); ++j)
        m.set_col(j, out.project(f.apply(in.section(sv_unit(j)))));
    return m;
}

int cohomology_dim(const ComplexSlice& s) {
    if (!(s.d_out * s.d_in).is_zero())
        throw CompositeNotZero("d_out * d_in != 0 (mis-assembled differential)");
    int k = s.d_out.cols() - rank(s.d_out);
    int h = k - rank(s.d_in);
    if (h < 0) throw Error("cohomology_dim: negative dimension (inconsistent slice)");
    return h;
}

CohomologySpace cohomology_space(const ComplexSlice& s) {
    if (!(s.d_out * s.d_in).is_zero())
        throw CompositeNotZero("d_out * d_in != 0 (mis-assembled differential)");
    CohomologySpace h;
    h.ambient_dim = s.d_out.cols();
    h.kernel = kernel_basis(s.d_out);
    SparseMatrix k = SparseMatrix::from_cols(h.ambient_dim, h.kernel);
    // image vectors in kernel coordinates
    std::vector<SparseVec> img_in_k;
    for (int c = 0; c < s.d_in.cols(); ++c) {
        const SparseVec& im = s.d_in.col(c);
        if (im.empty()) continue;
        auto x = solve(k, im);
        if (!x) throw Error("cohomology_space: image not inside kernel");
        img_in_k.push_back(*x);
    }
    h.modulo = quotient((int)h.kernel.size(), img_in_k);
    return h;
}

SparseVec CohomologySpace::class_of(const SparseVec& v) const {
    SparseMatrix k = SparseMatrix::from_cols(ambient_dim, kernel);
    auto x = solve(k, v);
    if (!x) throw Error("class_of: vector is not a cocycle");
    return modulo.project(*x);
}

SparseVec CohomologySpace::representative(const SparseVec& cls) const {
    SparseVec kc = modulo.section(cls);
    SparseVec v;
    for (auto& [j, c] : kc) sv_axpy(v, c, kernel[j]);
    return v;
}

SparseMatrix induced_on_cohomology(const SparseMatrix& f, const CohomologySpace& from,
                                   const CohomologySpace& to) {
    SparseMatrix m(to.dim(), from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        SparseVec rep = from.representative(sv_unit(j));
        m.set_col(j, to.class_of(f.apply(rep)));
    }
    return m;
}

}  // namespace hopfcyc
