#pragma once
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/presentation.hpp"

namespace hopfcyc {

// Finite-dimensional module over a presentation with an exact action matrix
// for every basis key.
struct HModule {
    HopfPtr H;
    int dim = 0;
    std::string name;
    std::function<SparseMatrix(const Key&)> action;

    SparseMatrix action_of(const Elem& h) const;
    // action(1) = id and action(a)action(b) = action(ab) on keys <= D.
    void check_module_axioms(int D) const;
};

HModule trivial_module(HopfPtr H, int dim = 1);
HModule regular_module(HopfPtr group);  // group algebra on itself, left mult
HModule uq_simple2(HopfPtr uq);         // the 2-dimensional simple module

// Words over the module basis; length 0 is the adjoined unit of T~(V).
using Word = std::vector<int>;

// X_delta(T(V)) at word length <= max_len, assembled two ways:
// (a) the literal boundaries N and 1 - t on T(V)_delta (t = backward shift);
// (b) from Omega^1(T(V)) generators-and-relations, with b(x dv y) computed
//     through the Leibniz rewriting and natural = y.x.v.
// MismatchedBoundaries if the two assemblies disagree.
struct TensorXReport {
    int x0_dim = 0, x1_dim = 0;  // localized quotient dims
    bool assemblies_agree = false;
    int h0_dim = -1;  // ker(d)/im(b) on the computed window
    // twisted flavor only:
    bool bsigma_d_zero = false;  // b_sigma d = 0 modulo coinvariants
    bool d_bsigma_zero = false;  // d b_sigma = 0 in the quotient
};

TensorXReport tensor_x_complex(const HModule& V, const Character& delta, int max_len);

// sigma-twisted variant X_{delta,sigma}(T(V)): b_sigma(x dv y) =
// y sigma(x) sigma(v) - v y sigma(x); verifies the well-definedness
// identities of the twisted complex as exact membership statements.
TensorXReport tensor_x_twisted(const HModule& V, const Character& delta, const Key& sigma,
                               int max_len);

}  // namespace hopfcyc
