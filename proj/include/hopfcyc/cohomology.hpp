#pragma once
#include <functional>

#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/linalg.hpp"
#include "hopfcyc/report.hpp"

namespace hopfcyc {

// Hochschild cohomology of the module's b-complex, degrees 0..n_max. Splits
// into exact per-weight blocks when the faces are weight-homogeneous (true
// for every presentation this engine assembles matrices for); the report
// carries the per-weight table and the exactness flag.
CohomologyReport hochschild(const CocyclicModule& M, int n_max);

// Unsplit variant, kept as the cross-check route for the per-weight split.
std::map<int, int> hochschild_dims_unsplit(const CocyclicModule& M, int n_max);

struct CyclicOutcome {
    CohomologyReport report;
    std::vector<int> hc_dims;                // HC^0..HC^n_max
    std::vector<SparseMatrix> s_matrices;    // induced S: HC^n -> HC^{n+2}
};

// Cyclic cohomology from the first-quadrant cyclic bicomplex with columns
// truncated at n_max+2 (making HC^n exact for n <= n_max); S is the
// two-column shift, reported as induced matrices on cohomology; the report
// also carries the S-stabilized periodic window.
CyclicOutcome cyclic_and_periodic(const CocyclicModule& M, int n_max);

// Cotor_H(C_alpha, C_beta) from the cobar-type complex with boundary
// u -> (alpha, u) - d'_beta(u); levels are H^{xn} truncated at weight D.
CohomologyReport cotor(const HopfPtr& H, const Key& alpha, const Key& beta, int n_max, int D);

// The left-integral law sum tau(h0) h1 = tau(h) 1 (checked first, throws
// NotIntegral with a witness), then the contraction s(h^1,...) =
// tau(h^1)(h^2,...) satisfies b s + s b = id on levels 1..n_max.
void haar_contraction_check(const HopfPtr& H, const std::function<Rat(const Key&)>& tau,
                            int n_max, int D);

// The Haar integral of a finite group algebra: the coefficient-of-identity
// functional (the averaging integral under the function-algebra picture).
std::function<Rat(const Key&)> haar_integral(const HopfPtr& group);

// Exact degree-0/1 window for U_q(sl2) with the modular pair (eps, K). The
// full level spaces are infinite, so the claims are elementwise exact
// statements rather than truncated ranks.
struct UqWindow {
    bool hc0_zero = false;            // b(1) = 1 - K != 0
    bool e_cocycle = false;           // E is a cyclic 1-cocycle
    bool kf_cocycle = false;          // KF is a cyclic 1-cocycle
    bool independent = false;         // E, KF independent mod span{1-K}
    bool cotor1_contains = false;     // [E],[KF] in Cotor^1(C, C_K)
};
UqWindow uq_sl2_window(const HopfPtr& H);

}  // namespace hopfcyc
