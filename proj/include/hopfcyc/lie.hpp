#pragma once
#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/lie_algebra.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

// Wedge basis of Lambda^n(g): strictly increasing index tuples.
std::vector<std::vector<int>> wedge_basis(int dim, int n);

// Chevalley-Eilenberg boundary with coefficients in C_delta, as a matrix
// Lambda^n -> Lambda^{n-1}. Kept independent of the Hopf machinery: this is
// the brute-force oracle side.
SparseMatrix d_lie_matrix(const LieAlgebra& g, const std::vector<Rat>& delta, int n);

// H_*(g; C_delta) dims for * = 0..n_max by ranks of the CE complex.
std::vector<int> ce_homology_dims(const LieAlgebra& g, const std::vector<Rat>& delta, int n_max);

// Antisymmetrization A(v_{i1} ^ ... ^ v_{in}) = (1/n!) sum_s sign(s) (x) v_s,
// landing in level n of the localized module (tuples of generator keys).
Tensor antisymmetrize(const LieAlgebra& g, const std::vector<int>& wedge);

// d_Lie of a wedge expressed in wedge coordinates (sparse over wedge_basis).
SparseVec d_lie_of_wedge(const LieAlgebra& g, const std::vector<Rat>& delta,
                         const std::vector<int>& wedge);

struct LieQuasiIsoReport {
    bool cocycles_ok = false;   // b_delta(A x) = 0 for every wedge, n <= n_max
    bool compat_ok = false;     // B_delta(A x) = A(d_Lie x)
    bool hh_matches = false;    // delta = 0: per-weight HH dims equal dim Lambda^n
    int wedges_checked = 0;
};

// Throws CharacterNotOnAbelianization if delta does not kill [g,g].
LieQuasiIsoReport lie_quasi_iso_check(const LieAlgebra& g, const std::vector<Rat>& delta,
                                      int n_max);

}  // namespace hopfcyc
