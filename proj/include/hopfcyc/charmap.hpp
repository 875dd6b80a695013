#pragma once
#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/lie_algebra.hpp"
#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

// An algebra A (finite basis, unital) with a flat action of H by matrices.
struct HAlgebraAction {
    HopfPtr H;
    int dimA = 0;
    int unitA = 0;
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVec>> mul;  // mul[i][j] = e_i * e_j
    std::function<SparseMatrix(const Key&)> action;

    SparseVec mul_vec(const SparseVec& a, const SparseVec& b) const;
    SparseMatrix action_of(const Elem& h) const;
};

// C[Gamma] acting on itself by conjugation g.a = g a g^{-1}.
HAlgebraAction conjugation_action(HopfPtr group);

// Truncated polynomial algebra Q[u_1..u_m] modulo the monomial ideal given
// by per-variable caps and/or a total-degree cap. Only derivations that
// preserve the ideal are honest endomorphisms here: Euler-type combinations
// of u_i d/du_j (degree-preserving) always are.
struct PolyAlgebra {
    std::vector<int> caps;                 // cap per variable (exponent < cap)
    int total_cap = -1;                    // total degree < total_cap when >= 0
    std::vector<std::vector<int>> mons;    // exponent vectors, sorted
    std::map<std::vector<int>, int> index;
    int dim() const { return (int)mons.size(); }
    static PolyAlgebra make(std::vector<int> caps, int total_cap = -1);
    SparseVec mul_mon(int i, int j) const;  // 0 when out of the ideal
    SparseMatrix euler(int i, int j) const; // u_i d/du_j (requires it to preserve the ideal)
};
// Action of U(g) through Lie generators realized as derivations L[i] of A.
HAlgebraAction derivation_action(HopfPtr enveloping_h, const PolyAlgebra& A,
                                 std::vector<SparseMatrix> L);

// Module law and flatness h(ab) = sum h0(a) h1(b) on keys of weight <= D and
// all basis pairs; NotFlat with a witness otherwise.
void check_flat(const HAlgebraAction& act, int D);

// tau(ab) = tau(ba) and tau(h a) = delta(h) tau(a).
void check_invariant_trace(const HAlgebraAction& act, const std::vector<Rat>& tau,
                           const Character& delta, int D);

// Dense (n+1)-linear functional on the A-basis.
struct Cochain {
    int n = 0, dimA = 0;
    std::vector<Rat> coef;  // index = sum a_i dimA^i, a_0 fastest
    static Cochain zero(int n, int dimA);
    Rat& at(const std::vector<int>& idx);
    const Rat& at(const std::vector<int>& idx) const;
    bool operator==(const Cochain& o) const { return n == o.n && coef == o.coef; }
    bool is_zero() const;
};

// Cochain-side cocyclic structure (precomposition with the cyclic module of
// A): cofaces d^i multiply neighbours (wrap for i = n+1), codegeneracies
// insert the unit, t precomposes with the backward rotation.
Cochain cochain_face(const HAlgebraAction& act, int i, const Cochain& phi);
Cochain cochain_degeneracy(const HAlgebraAction& act, int i, const Cochain& phi);
Cochain cochain_cyclic(const Cochain& phi);  // unsigned
Cochain cochain_b(const HAlgebraAction& act, const Cochain& phi);
Cochain cochain_lambda(const Cochain& phi);
bool cochain_b_closed(const HAlgebraAction& act, const Cochain& phi);
bool cochain_cyclic_invariant(const Cochain& phi);

// k^tau(h_1,...,h_n)(a_0,...,a_n) = tau(a_0 h_1(a_1) ... h_n(a_n)), extended
// linearly over a level-n vector of the localized module. Preconditions
// (flatness, trace invariance, S_delta^2 = Id) are verified.
Cochain char_map_tau(const HAlgebraAction& act, const std::vector<Rat>& tau,
                     const Character& delta, const Tensor& c, int n);

// gamma(h^0,...,h^n)(a_0,...,a_n) = tau(h^0(a_0) ... h^n(a_n)) on the plain
// module (tau only needs to be a trace).
Cochain gamma_tau(const HAlgebraAction& act, const std::vector<Rat>& tau, const Tensor& c, int n);

// Matrix of k (resp. gamma) from a module level onto cochain coordinates.
SparseMatrix char_map_matrix(const HAlgebraAction& act, const std::vector<Rat>& tau,
                             const Character& delta, const CocyclicModule& M, int n);
SparseMatrix gamma_matrix(const HAlgebraAction& act, const std::vector<Rat>& tau,
                          const CocyclicModule& M, int n);
// Matrices of the cochain-side cofaces/degeneracies/cyclic operator.
SparseMatrix cochain_face_matrix(const HAlgebraAction& act, int n, int i);
SparseMatrix cochain_degeneracy_matrix(const HAlgebraAction& act, int n, int i);
SparseMatrix cochain_cyclic_matrix(const HAlgebraAction& act, int n);

// (1/n!) sum_s sign(s) tau(a_0 v_{s(1)}(a_1) ... v_{s(n)}(a_n)) for a wedge;
// requires tau invariant (tau . L_v = 0 against delta) — direct formula,
// independent of char_map_tau.
Cochain lie_char_map(const HAlgebraAction& act, const std::vector<Rat>& tau, const LieAlgebra& g,
                     const std::vector<Rat>& delta, const std::vector<int>& wedge);

}  // namespace hopfcyc
