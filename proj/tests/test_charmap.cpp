#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/charmap.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/lie.hpp"

using namespace hopfcyc;

static std::vector<Rat> coeff_of_identity(const HAlgebraAction& a) {
    std::vector<Rat> tau(a.dimA, Rat(0));
    tau[a.unitA] = Rat(1);
    return tau;
}

TEST_CASE("conjugation action of C[Z/3] is flat; coefficient-of-identity is invariant") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    CHECK_NOTHROW(check_flat(act, 0));
    CHECK_NOTHROW(check_invariant_trace(act, coeff_of_identity(act), Character::counit(), 0));
    // corrupted action table is rejected
    auto bad = act;
    auto good_action = act.action;
    bad.action = [good_action](const Key& k) {
        SparseMatrix m = good_action(k);
        if (k == Key{1}) m.add(0, 0, Rat(1));
        return m;
    };
    CHECK_THROWS_AS(check_flat(bad, 0), NotFlat);
}

TEST_CASE("U(g) acting by derivations on a truncated polynomial algebra is flat") {
    // abelian: diagonal Euler derivations on Q[u1,u2]/(u1^2,u2^2)
    auto U = make_builtin("lie-abelian2");
    PolyAlgebra A = PolyAlgebra::make({2, 2});
    auto act = derivation_action(U, A, {A.euler(0, 0), A.euler(1, 1)});
    CHECK_NOTHROW(check_flat(act, 2));
    // sl2: e = u1 d2, f = u2 d1, h = u1 d1 - u2 d2 on Q[u1,u2]/(deg >= 3)
    auto S = make_builtin("lie-sl2");
    PolyAlgebra B = PolyAlgebra::make({3, 3}, 3);
    auto sact = derivation_action(
        S, B, {B.euler(0, 1), B.euler(1, 0), B.euler(0, 0) - B.euler(1, 1)});
    CHECK_NOTHROW(check_flat(sact, 2));
}

TEST_CASE("n=0, c=1: the output is the trace itself") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    auto tau = coeff_of_identity(act);
    Cochain out = char_map_tau(act, tau, Character::counit(), tensor_of(TupleKey{}), 0);
    for (int i = 0; i < act.dimA; ++i) CHECK(out.at({i}) == tau[i]);
}

TEST_CASE("char_map_tau sends cyclic cocycles to b-closed lambda-invariant cochains") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    auto tau = coeff_of_identity(act);
    Character eps = Character::counit();
    auto M = CocyclicModule::sharp_delta(H, eps, 0);
    // cyclic cocycles at level n: ker(b) /\ ker(1 - lambda)
    for (int n = 0; n <= 2; ++n) {
        SparseMatrix b = M.b_matrix(n);
        SparseMatrix inv = M.lambda_matrix(n) - SparseMatrix::identity(M.level_dim(n));
        SparseMatrix stacked(b.rows() + inv.rows(), M.level_dim(n));
        for (int c = 0; c < b.cols(); ++c) {
            for (auto& [r, x] : b.col(c)) stacked.add(r, c, x);
            for (auto& [r, x] : inv.col(c)) stacked.add(b.rows() + r, c, x);
        }
        int found = 0;
        for (auto& v : kernel_basis(stacked)) {
            ++found;
            Tensor c = M.tensor_of_vec(n, v);
            Cochain img = char_map_tau(act, tau, eps, c, n);
            CHECK(cochain_b_closed(act, img));
            CHECK(cochain_cyclic_invariant(img));
        }
        if (n == 0) CHECK(found > 0);
    }
}

TEST_CASE("negative control: some non-cocycle input fails lambda-invariance") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    auto tau = coeff_of_identity(act);
    bool some_fail = false;
    for (int g = 0; g < 3 && !some_fail; ++g) {
        Cochain img = char_map_tau(act, tau, Character::counit(), tensor_of(TupleKey{Key{g}}), 1);
        if (!cochain_cyclic_invariant(img) || !cochain_b_closed(act, img)) some_fail = true;
    }
    CHECK(some_fail);
}

TEST_CASE("char_map_tau commutes with all face/degeneracy/cyclic operators level-wise") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    auto tau = coeff_of_identity(act);
    Character eps = Character::counit();
    auto M = CocyclicModule::sharp_delta(H, eps, 0);
    for (int n = 0; n <= 2; ++n) {
        SparseMatrix k_n = char_map_matrix(act, tau, eps, M, n);
        SparseMatrix k_n1 = char_map_matrix(act, tau, eps, M, n + 1);
        for (int i = 0; i <= n + 1; ++i)
            CHECK(k_n1 * M.face_matrix(n, i) == cochain_face_matrix(act, n, i) * k_n);
        CHECK(k_n * M.cyclic_matrix(n) == cochain_cyclic_matrix(act, n) * k_n);
        if (n >= 1) {
            SparseMatrix k_m = char_map_matrix(act, tau, eps, M, n - 1);
            for (int i = 0; i <= n - 1; ++i)
                CHECK(k_m * M.degeneracy_matrix(n, i) ==
                      cochain_degeneracy_matrix(act, n, i) * k_n);
        }
    }
}

TEST_CASE("gamma_tau: unit input recovers the plain pairing and gamma descends to k") {
    auto H = cyclic_group_algebra(3);
    auto act = conjugation_action(H);
    auto tau = coeff_of_identity(act);
    Character eps = Character::counit();
    auto P = CocyclicModule::sharp(H, 0);
    auto L = CocyclicModule::sharp_delta(H, eps, 0);
    // chain-map property against the plain module faces on level 2
    for (int n : {1, 2}) {
        SparseMatrix g_n = gamma_matrix(act, tau, P, n);
        SparseMatrix g_n1 = gamma_matrix(act, tau, P, n + 1);
        for (int i = 0; i <= n + 1; ++i)
            CHECK(g_n1 * P.face_matrix(n, i) == cochain_face_matrix(act, n, i) * g_n);
    }
    // for invariant tau, gamma factors through pi as char_map_tau
    for (int n : {1, 2}) {
        SparseMatrix g_n = gamma_matrix(act, tau, P, n);
        SparseMatrix k_n = char_map_matrix(act, tau, eps, L, n);
        CHECK(g_n == k_n * L.pi_matrix(P, n));
    }
}

TEST_CASE("lie_char_map: abelian cocycles, agreement with char_map_tau . A") {
    // L1 = u1 d1 - u2 d2, L2 = u2 d2 - u3 d3 on Q[u]/(u_i^2); the top
    // monomial u1 u2 u3 has weight 0 under both, so tau is 0-invariant
    auto U = make_builtin("lie-abelian2");
    LieAlgebra g = LieAlgebra::abelian(2);
    PolyAlgebra A = PolyAlgebra::make({2, 2, 2});
    auto act = derivation_action(
        U, A, {A.euler(0, 0) - A.euler(1, 1), A.euler(1, 1) - A.euler(2, 2)});
    CHECK_NOTHROW(check_flat(act, 2));
    std::vector<Rat> tau(A.dim(), Rat(0));
    tau[A.index.at({1, 1, 1})] = Rat(1);
    CHECK_NOTHROW(check_invariant_trace(act, tau, Character::counit(), 2));
    // n=1: output is a nonzero cyclic 1-cocycle
    Cochain c1 = lie_char_map(act, tau, g, {}, {0});
    CHECK(!c1.is_zero());
    CHECK(cochain_b_closed(act, c1));
    CHECK(cochain_cyclic_invariant(c1));
    // coincides with char_map_tau . antisymmetrization on wedges, n <= 2
    Character eps = Character::counit();
    for (auto& w : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1}}) {
        Cochain direct = lie_char_map(act, tau, g, {}, w);
        Cochain via = char_map_tau(act, tau, eps, antisymmetrize(g, w), (int)w.size());
        CHECK(direct == via);
    }
}

TEST_CASE("lie_char_map negative control: a non-cycle wedge fails b-closedness") {
    // same abelian action, but tau = coeff of u1 u2 is invariant for
    // delta = (0,1), and e1 ^ e2 is not a d_Lie cycle for that delta
    auto U = make_builtin("lie-abelian2");
    LieAlgebra g = LieAlgebra::abelian(2);
    PolyAlgebra A = PolyAlgebra::make({2, 2, 2});
    auto act = derivation_action(
        U, A, {A.euler(0, 0) - A.euler(1, 1), A.euler(1, 1) - A.euler(2, 2)});
    std::vector<Rat> tau(A.dim(), Rat(0));
    tau[A.index.at({1, 1, 0})] = Rat(1);
    std::vector<Rat> delta = {Rat(0), Rat(1)};
    CHECK_NOTHROW(check_invariant_trace(act, tau, Character::lie("d", delta), 2));
    SparseVec dl = d_lie_of_wedge(g, delta, {0, 1});
    CHECK(!dl.empty());  // not a cycle
    Cochain img = lie_char_map(act, tau, g, delta, {0, 1});
    CHECK(!img.is_zero());
    // A(x) is always a Hochschild cocycle (the quasi-iso lemma), so what a
    // non-cycle wedge breaks is the cyclic-invariance half of the package
    CHECK(cochain_b_closed(act, img));
    CHECK(!cochain_cyclic_invariant(img));
}
