#pragma once
#include <optional>
#include <vector>

#include "hopfcyc/sparse_matrix.hpp"

namespace hopfcyc {

// Reduced row-echelon form over Q. Pivot choice is deterministic: leftmost
// column first; among candidate rows the one with fewest nonzeros wins
// (Markowitz-style fill-in preference), ties broken by original row index.
struct RrefResult {
    std::vector<SparseVec> rows;  // reduced rows, one per pivot, pivot order
    std::vector<int> pivot_cols;
    int rank = 0;
    int cols = 0;
};

RrefResult rref(const SparseMatrix& m);
RrefResult rref_rows(std::vector<SparseVec> rows, int cols);

int rank(const SparseMatrix& m);

// Independent vectors spanning ker(m); count == cols - rank. Ordered by free
// column index.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Basis of the column space, as reduced vectors.
std::vector<SparseVec> image_basis(const SparseMatrix& m);

// One solution of M x = b (free coordinates set to 0), or nullopt.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

// Reduces v against reduced relation rows in place; the result has zero
// coordinates at the relation pivots.
SparseVec reduce_by(const std::vector<SparseVec>& reduced_rows, SparseVec v);
bool in_span(const RrefResult& span, const SparseVec& v);

// Presentation of ambient/span(relations): pivot and representative columns
// partition the coordinates, projection . section = id.
struct QuotientPresentation {
    int ambient_dim = 0;
    std::vector<SparseVec> reduced_relations;
    std::vector<int> pivot_cols;
    std::vector<int> representative_cols;

    int dim() const { return (int)representative_cols.size(); }
    // Coordinates of [v] in the representative basis.
    SparseVec project(const SparseVec& v) const;
    // Canonical ambient representative of quotient coordinates q.
    SparseVec section(const SparseVec& q) const;
    // Matrix of the projection, dim() x ambient_dim.
    SparseMatrix projection_matrix() const;
    SparseMatrix section_matrix() const;
};

QuotientPresentation quotient(int ambient_dim, const std::vector<SparseVec>& relations);

// Matrix induced by f on quotients: proj_out . f . section_in. When
// `check_descends`, verifies f maps in-relations into the out-relation span.
SparseMatrix induced_on_quotient(const SparseMatrix& f, const QuotientPresentation& in,
                                 const QuotientPresentation& out, bool check_descends = true);

// One homological spot d_in: C^{n-1} -> C^n, d_out: C^n -> C^{n+1}.
struct ComplexSlice {
    SparseMatrix d_in;
    SparseMatrix d_out;
};

// dim ker(d_out) - rank(d_in); throws CompositeNotZero unless d_out*d_in == 0.
int cohomology_dim(const ComplexSlice& s);

// Explicit cohomology space of a slice: representatives live in the ambient
// C^n; classes are coordinates w.r.t. the chosen representative set.
struct CohomologySpace {
    int ambient_dim = 0;
    std::vector<SparseVec> kernel;  // basis of ker d_out
    QuotientPresentation modulo;    // kernel coords modulo image coords
    int dim() const { return modulo.dim(); }
    // Class coordinates of an ambient cocycle (throws if not a cocycle).
    SparseVec class_of(const SparseVec& v) const;
    // Ambient representative of class coordinates.
    SparseVec representative(const SparseVec& cls) const;
};

CohomologySpace cohomology_space(const ComplexSlice& s);

// Matrix of the map induced on cohomology by a chain map (given on ambient
// spaces). Throws if f does not send cocycles to cocycles.
SparseMatrix induced_on_cohomology(const SparseMatrix& f, const CohomologySpace& from,
                                   const CohomologySpace& to);

}  // namespace hopfcyc
